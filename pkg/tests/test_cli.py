import contextlib
import io
import json
import sys
from pathlib import Path as FsPath

import pytest

from kssbij.cli import run
from kssbij.cli.codec import (
    decode_led,
    decode_path,
    decode_rc,
    decode_tableau,
    encode_led,
    encode_path,
    encode_rc,
    encode_tableau,
)
from kssbij.evolution import Path, local_energy_distribution
from kssbij.kss import phi_energy
from kssbij.tableaux import Tableau

GOLDEN = FsPath(__file__).parent / "golden"


def cli(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = run(list(argv))
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


def golden(name):
    return (GOLDEN / name).read_text()


class TestEnergyVerb:
    def test_text(self):
        code, out, _ = cli(
            "energy",
            stdin='[{"n":5,"rows":[[1,1],[2,4]]},{"n":5,"rows":[[3,4],[4,5],[5,6]]}]',
        )
        assert code == 0
        assert out == "H = 3\n"

    def test_json(self):
        code, out, _ = cli(
            "energy",
            "--format",
            "json",
            stdin='[{"n":5,"rows":[[1,1],[2,4]]},{"n":5,"rows":[[3,4],[4,5],[5,6]]}]',
        )
        assert code == 0
        assert json.loads(out) == {"H": 3}


class TestRmatrixVerb:
    def test_worked_pair(self):
        code, out, _ = cli(
            "rmatrix",
            "--format",
            "json",
            stdin='[{"n":5,"rows":[[1,1],[2,4]]},{"n":5,"rows":[[3,4],[4,5],[5,6]]}]',
        )
        assert code == 0
        assert json.loads(out) == [
            {"n": 5, "rows": [[1, 1], [2, 4], [3, 5]]},
            {"n": 5, "rows": [[4, 4], [5, 6]]},
        ]

    def test_needs_two_tableaux(self):
        code, _, err = cli("rmatrix", stdin='[{"n":1,"rows":[[1]]}]')
        assert code == 2
        assert "error:" in err


class TestPhiVerbs:
    def test_phi_matches_golden(self):
        code, out, _ = cli(
            "phi", str(GOLDEN / "path_3factor.json"), "--format", "json"
        )
        assert code == 0
        assert out == golden("rc_3factor.json")

    def test_phi_six_factor(self):
        code, out, _ = cli(
            "phi", str(GOLDEN / "path_6factor.json"), "--format", "json"
        )
        assert code == 0
        assert out == golden("rc_6factor.json")

    def test_phi_check_roundtrip(self):
        code, _, _ = cli(
            "phi", str(GOLDEN / "path_3factor.json"), "--check-roundtrip"
        )
        assert code == 0

    def test_phi_inverse_with_order(self):
        code, out, _ = cli(
            "phi-inverse",
            str(GOLDEN / "rc_a1.json"),
            "--order",
            "1,2,0",
            "--format",
            "json",
        )
        assert code == 0
        assert json.loads(out) == json.loads(golden("path_3factor.json"))

    def test_phi_inverse_default_order_uses_origins(self):
        code, out, _ = cli(
            "phi-inverse", str(GOLDEN / "rc_3factor.json"), "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == json.loads(golden("path_3factor.json"))

    def test_round_trip_through_both_verbs(self):
        code, rc_json, _ = cli(
            "phi", str(GOLDEN / "path_6factor.json"), "--format", "json"
        )
        assert code == 0
        code, out, _ = cli("phi-inverse", "--format", "json", stdin=rc_json)
        assert code == 0
        assert json.loads(out) == json.loads(golden("path_6factor.json"))

    def test_invalid_rc_is_semantic_error(self):
        code, _, err = cli(
            "phi-inverse", stdin='{"n":1,"nu":[[1]],"mu":[{"rows":[[1,5]]}]}'
        )
        assert code == 3
        assert "error:" in err


class TestLedVerb:
    def test_text_matches_golden(self):
        code, out, _ = cli("led", str(GOLDEN / "path_3factor.json"))
        assert code == 0
        assert out == golden("led_3factor.txt")

    def test_json_round_trips(self):
        code, out, _ = cli(
            "led", str(GOLDEN / "path_3factor.json"), "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert [t["a"] for t in payload] == [1, 2, 3, 4]
        assert payload[0]["columns"] == [[1, k] for k in (1, 2, 3, 4)] + [
            [2, 1],
            [2, 2],
        ] + [[3, k] for k in (1, 2, 3, 4)]


class TestBbsVerb:
    def test_states_include_origin(self):
        code, out, _ = cli(
            "bbs",
            "--a",
            "1",
            "--l",
            "2",
            "--steps",
            "2",
            "--format",
            "json",
            stdin='{"n":1,"factors":[[[2]],[[2]],[[1]],[[1]],[[1]]]}',
        )
        assert code == 0
        states = json.loads(out)["states"]
        assert len(states) == 3
        assert states[1]["factors"] == [[[1]], [[1]], [[2]], [[2]], [[1]]]
        assert states[2]["factors"] == [[[1]], [[1]], [[1]], [[1]], [[2]]]

    def test_rejects_bad_level(self):
        code, _, err = cli(
            "bbs",
            "--a",
            "3",
            "--l",
            "1",
            "--steps",
            "1",
            stdin='{"n":1,"factors":[[[1]]]}',
        )
        assert code == 3
        assert "error:" in err


class TestValidateVerb:
    def test_valid_rc(self):
        code, out, _ = cli(
            "rc-validate", str(GOLDEN / "rc_a1.json"), "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {"valid": True, "violations": []}

    def test_empty_rc(self):
        code, _, _ = cli("rc-validate", stdin='{"n":1,"nu":[[]],"mu":[{"rows":[]}]}')
        assert code == 0

    def test_negative_rigging_default_unrestricted(self):
        rc = '{"n":1,"nu":[[2]],"mu":[{"rows":[[1,-1]]}]}'
        code, _, _ = cli("rc-validate", stdin=rc)
        assert code == 0
        code, out, _ = cli(
            "rc-validate", "--mode", "restricted", "--format", "json", stdin=rc
        )
        assert code == 3
        payload = json.loads(out)
        assert payload["valid"] is False
        assert payload["violations"]


class TestEnumerateVerb:
    def test_counts(self):
        code, out, _ = cli(
            "enumerate", "--r", "2", "--s", "2", "--n", "3", "--format", "json"
        )
        assert code == 0
        assert len(json.loads(out)) == 20

    def test_bad_shape(self):
        code, _, _ = cli("enumerate", "--r", "2", "--s", "1", "--n", "1")
        assert code == 3


class TestInsertVerb:
    def test_sequence(self):
        code, out, _ = cli(
            "tableau-insert",
            "--letters",
            "2,1",
            "--format",
            "json",
            stdin='{"n":5,"rows":[[1,1],[2,3]]}',
        )
        assert code == 0
        assert json.loads(out) == {"n": 5, "rows": [[1, 1, 1], [2, 2], [3]]}


class TestVerifyVerb:
    def test_single_suite(self):
        code, out, _ = cli(
            "verify",
            "--max-n",
            "1",
            "--max-l",
            "2",
            "--max-s",
            "1",
            "--suite",
            "yang-baxter",
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["total_failures"] == 0
        assert payload["suites"][0]["name"] == "yang-baxter"
        assert payload["suites"][0]["failures"] == []
        assert payload["suites"][0]["cases"] > 0

    def test_unknown_suite(self):
        code, _, _ = cli("verify", "--suite", "nope")
        assert code == 2


class TestErrorPaths:
    def test_malformed_json_reports_location(self):
        code, _, err = cli("energy", stdin="{oops")
        assert code == 2
        assert "line 1 column 2" in err

    def test_schema_error_reports_field(self):
        code, _, err = cli("phi", stdin='{"n":1}')
        assert code == 2
        assert "factors" in err

    def test_semantic_error(self):
        code, _, err = cli("tableau-insert", "--letters", "9", stdin='{"n":1,"rows":[[1]]}')
        assert code == 3
        assert "error:" in err

    def test_unknown_verb(self):
        code, _, _ = cli("frobnicate")
        assert code == 2

    def test_missing_file(self):
        code, _, err = cli("phi", "/no/such/file.json")
        assert code == 2


class TestCodec:
    def test_tableau_round_trip(self):
        t = Tableau(4, [[1, 1, 2, 4], [2, 2, 3, 5]])
        assert decode_tableau(encode_tableau(t)) == t

    def test_path_round_trip(self):
        p = Path(4, [Tableau(4, [[1, 2]]), Tableau(4, [[1], [3]])])
        assert decode_path(encode_path(p)) == p

    def test_rc_round_trip_keeps_origins(self):
        rc = phi_energy(
            Path(2, [Tableau(2, [[1, 2]]), Tableau(2, [[2]])])
        )
        back = decode_rc(encode_rc(rc))
        assert back == rc
        assert back.origins == rc.origins

    def test_rc_without_origins_encodes_none(self):
        payload = json.loads(golden("rc_a1.json"))
        rc = decode_rc(payload)
        assert encode_rc(rc).get("origins") is None

    def test_led_round_trip(self):
        p = decode_path(json.loads(golden("path_3factor.json")))
        led = local_energy_distribution(p)
        assert decode_led(encode_led(led)) == led

    def test_decode_rejects_wrong_level_count(self):
        from kssbij.cli.codec import MalformedInput

        with pytest.raises(MalformedInput):
            decode_rc({"n": 2, "nu": [[1]], "mu": [{"rows": []}, {"rows": []}]})
