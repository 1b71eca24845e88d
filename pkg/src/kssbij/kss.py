"""The KSS correspondence between paths and rigged configurations, both ways.

phi_energy reads the rigged configuration straight off the local energy
distribution: positive entries are grouped into soliton chains, group lengths
become configuration rows, riggings come from a closed-form count. phi_inverse
is the classical box-removal reconstruction; removing a quantum-space row of
length s at level a produces one path factor in B^{a+1,s}, column by column.
"""

from collections import namedtuple

from kssbij.evolution import Path, local_energy_distribution
from kssbij.rigged import RiggedConfiguration, validate
from kssbij.rmatrix import TensorPair, apply_R
from kssbij.tableaux import Tableau


class SolitonGroup:
    """One chain of positive entries in a level's table.

    cardinality is the number of chosen entries (= rows spanned); endpoint is
    the (j, k) column of the lowest chosen entry.
    """

    __slots__ = ("level", "cardinality", "endpoint", "cells")

    def __init__(self, level, cardinality, endpoint, cells):
        self.level = level
        self.cardinality = cardinality
        self.endpoint = endpoint
        self.cells = list(cells)

    def __repr__(self):
        return "SolitonGroup(a=%d, size=%d, endpoint=%r)" % (
            self.level,
            self.cardinality,
            self.endpoint,
        )


def extract_groups(led, a):
    """Splits the level-a table into groups, rightmost first.

    Each pass starts at the rightmost positive entry of row 1 and descends,
    choosing the rightmost positive entry strictly right of the current
    column, then decrements the chosen entries. Repeats until the table is
    zero. Same-column entries never chain: a unit of multiplicity at the
    current column belongs to a later group.
    """
    rows = [list(r) for r in led.tables[a - 1]]
    columns = led.columns
    ncols = len(columns)
    budget = sum(sum(r) for r in rows)
    groups = []
    for _ in range(budget):
        start = None
        if rows:
            for c in range(ncols - 1, -1, -1):
                if rows[0][c] > 0:
                    start = c
                    break
        if start is None:
            break
        rows[0][start] -= 1
        cells = [(1, columns[start])]
        cur = start
        l = 1
        while l < len(rows):
            nxt = None
            for c in range(ncols - 1, cur, -1):
                if rows[l][c] > 0:
                    nxt = c
                    break
            if nxt is None:
                break
            rows[l][nxt] -= 1
            cells.append((l + 1, columns[nxt]))
            cur = nxt
            l += 1
        groups.append(SolitonGroup(a, len(cells), cells[-1][1], cells))
    if any(any(x for x in r) for r in rows):
        raise AssertionError("group extraction stuck with positive entries left")
    return groups


def compute_rigging(p, led, group):
    """Rigging of one group: shape contribution plus windowed table sums."""
    a = group.level
    mu_s = group.cardinality
    j_s, k_s = group.endpoint
    shape_part = 0
    for j, (alpha, beta) in enumerate(p.shapes(), start=1):
        if alpha != a:
            continue
        if j < j_s:
            shape_part += min(mu_s, beta)
        elif j == j_s:
            shape_part += min(mu_s, k_s)
    table_part = 0
    for jj, kk in led.columns:
        if (jj, kk) > (j_s, k_s):
            continue
        for l in range(1, mu_s + 1):
            if a > 1:
                table_part += led.epsilon(a - 1, l, jj, kk)
            table_part -= 2 * led.epsilon(a, l, jj, kk)
            if a < p.rank_n:
                table_part += led.epsilon(a + 1, l, jj, kk)
    return shape_part + table_part


def quantum_space_of(p):
    """Scans factors left to right; B^{a+1,s} appends s to nu^(a). Returns (nu, origins)."""
    nu = [[] for _ in range(p.rank_n)]
    origins = [[] for _ in range(p.rank_n)]
    for j, b in enumerate(p.factors, start=1):
        a = b.n_rows - 1
        if a >= p.rank_n:
            raise ValueError("factor %d has too many rows for rank %d" % (j, p.rank_n))
        nu[a].append(b.width())
        origins[a].append(j)
    return nu, origins


def phi_energy(p):
    """The rigged configuration of a path, read off its local energy distribution."""
    led = local_energy_distribution(p)
    mu = []
    for a in range(1, p.rank_n + 1):
        groups = extract_groups(led, a)
        rows = [(g.cardinality, compute_rigging(p, led, g)) for g in groups]
        # partition order: row lengths weakly decreasing
        rows.sort(key=lambda t: (-t[0], -t[1]))
        mu.append(tuple(rows))
    nu, origins = quantum_space_of(p)
    return RiggedConfiguration(p.rank_n, nu, mu, origins)


def linearized_image(rc, a, l):
    """The configuration predicted for one box-ball update: riggings at level
    a grow by min(l, row length), everything else fixed.

    On a finite path the prediction is realized exactly when it is still a
    valid unrestricted configuration; otherwise the soliton exits the path
    (the carrier comes back loaded) and the corresponding rows vanish instead.
    """
    mu = [
        tuple((m, r + min(l, m)) for m, r in level) if lev == a - 1 else level
        for lev, level in enumerate(rc.mu)
    ]
    return RiggedConfiguration(rc.rank_n, rc.nu, mu, rc.origins)


TraceStep = namedtuple("TraceStep", ["level", "letter", "removed", "state"])
RowTrace = namedtuple("RowTrace", ["flat_index", "level", "columns"])


class RemovalTrace:
    """Diagnostic record of phi_inverse: per removed row, per produced column,
    the transport steps with letters, removed boxes and state snapshots."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = list(rows)


class _State:
    """Mutable working copy of a rigged configuration during box removal.

    Quantum rows keep their flat identity; at most one transported unit box
    exists at a time and is tracked separately (it counts toward the vacancy
    numbers one level up while present).
    """

    def __init__(self, rc):
        self.n = rc.rank_n
        self.nu = []
        flat = 0
        for level in rc.nu:
            rows = []
            for length in level:
                rows.append([length, flat])
                flat += 1
            self.nu.append(rows)
        self.mu = [[[m, r] for m, r in level] for level in rc.mu]
        self.temp_level = None

    def position(self, level, flat):
        for i, row in enumerate(self.nu[level]):
            if row[1] == flat:
                return i
        raise ValueError("quantum row %d not present at level %d" % (flat, level))

    def q(self, a, l):
        if a < 1 or a > self.n:
            return 0
        return sum(min(l, m) for m, _ in self.mu[a - 1])

    def vacancy(self, a, l):
        base = sum(min(l, m) for m, _ in self.nu[a - 1])
        if self.temp_level == a - 1:
            base += 1
        return base + self.q(a - 1, l) - 2 * self.q(a, l) + self.q(a + 1, l)

    def snapshot(self):
        """Plain view of the current state; a transported box shows up as a
        trailing length-1 quantum row on its level."""
        nu = [[m for m, _ in level if m > 0] for level in self.nu]
        if self.temp_level is not None:
            nu[self.temp_level] = nu[self.temp_level] + [1]
        mu = [[(m, r) for m, r in level] for level in self.mu]
        return RiggedConfiguration(self.n, nu, mu)


def _micro_step(state, i, col_x, quantum_pos=None):
    """Transports the box x^(i) one level down; returns (letter, removed boxes).

    Walks levels i+1, i+2, ... choosing the shortest singular row that is not
    shorter than the previous choice (first choice: not shorter than the
    column of x^(i)); ties go to the smallest storage index. The letter is the
    first level where no choice exists. All removals are simultaneous;
    shortened rows get their new vacancy number as rigging.
    """
    chosen = []
    prev = col_x
    m = i + 1
    while m <= state.n:
        best = None
        best_len = None
        for idx, (length, rig) in enumerate(state.mu[m - 1]):
            if length < prev:
                continue
            if best_len is not None and length >= best_len:
                continue
            if state.vacancy(m, length) == rig:
                best, best_len = idx, length
        if best is None:
            break
        chosen.append((m, best))
        prev = best_len
        m += 1
    letter = m

    removed = []
    if quantum_pos is not None:
        row = state.nu[i][quantum_pos]
        removed.append(("nu", i, row[0]))
        row[0] -= 1
    else:
        removed.append(("nu", i, 1))
        state.temp_level = None
    for lev, idx in chosen:
        removed.append(("mu", lev, state.mu[lev - 1][idx][0]))
        state.mu[lev - 1][idx][0] -= 1
    if i >= 1:
        state.temp_level = i - 1
    for lev, idx in chosen:
        row = state.mu[lev - 1][idx]
        if row[0] > 0:
            row[1] = state.vacancy(lev, row[0])
    for lev, idx in chosen:
        if state.mu[lev - 1][idx][0] == 0:
            del state.mu[lev - 1][idx]
    cols = [c for _, _, c in removed]
    if cols != sorted(cols):
        raise AssertionError("removed box columns must weakly increase with level")
    return letter, removed


def _remove_row(state, level, pos):
    """Dismantles one quantum row box by box, right to left.

    Returns (factor tableau in B^{level+1, s}, per-column trace steps).
    Letters of each box form the leftmost empty column, top to bottom.
    """
    a = level
    s = state.nu[level][pos][0]
    columns = []
    col_traces = []
    for _ in range(s):
        col_x = state.nu[level][pos][0]
        letters = {}
        steps = []
        for i in range(a, -1, -1):
            if i == a:
                letter, removed = _micro_step(state, i, col_x, quantum_pos=pos)
            else:
                letter, removed = _micro_step(state, i, 1)
            letters[i] = letter
            steps.append(TraceStep(i, letter, removed, state.snapshot()))
        if state.temp_level is not None:
            raise AssertionError("transported box left behind")
        column = [letters[i] for i in range(a + 1)]
        for t in range(a):
            if column[t] >= column[t + 1]:
                raise AssertionError("reconstructed column is not strictly increasing")
        columns.append(column)
        col_traces.append(steps)
    if state.nu[level][pos][0] != 0:
        raise AssertionError("quantum row not exhausted")
    del state.nu[level][pos]
    rows = [[columns[b][t] for b in range(s)] for t in range(a + 1)]
    try:
        tab = Tableau(state.n, rows)
    except ValueError as exc:
        raise AssertionError("reconstructed factor is not semistandard: %s" % exc) from exc
    return tab, col_traces


def _to_rc(state, rc):
    origin_of = {flat: org for flat, _, _, _, org in rc.quantum_rows()}
    nu = [[m for m, _ in level] for level in state.nu]
    origins = [[origin_of[flat] for _, flat in level] for level in state.nu]
    mu = [[(m, r) for m, r in level] for level in state.mu]
    return RiggedConfiguration(state.n, nu, mu, origins)


def default_order(rc):
    """Reverse provenance order when known, else reverse flat order."""
    rows = rc.quantum_rows()
    if rows and all(org is not None for _, _, _, _, org in rows):
        return [flat for flat, _, _, _, org in sorted(rows, key=lambda t: -t[4])]
    return [flat for flat, _, _, _, _ in reversed(rows)]


def _check_valid(rc):
    problems = validate(rc, "unrestricted")
    if problems:
        raise ValueError("invalid rigged configuration: " + "; ".join(problems))


def phi_inverse_trace(rc, order=None):
    """phi_inverse with its full diagnostic trace; returns (Path, RemovalTrace)."""
    _check_valid(rc)
    rows = rc.quantum_rows()
    if order is None:
        order = default_order(rc)
    order = [int(x) for x in order]
    if sorted(order) != list(range(len(rows))):
        raise ValueError("order must be a permutation of 0..%d" % (len(rows) - 1))
    state = _State(rc)
    produced = []
    traces = []
    for flat in order:
        level = rows[flat][1]
        pos = state.position(level, flat)
        tab, col_traces = _remove_row(state, level, pos)
        produced.append(tab)
        traces.append(RowTrace(flat, level, col_traces))
    return Path(rc.rank_n, tuple(reversed(produced))), RemovalTrace(traces)


def phi_inverse(rc, order=None):
    """Reconstructs the path; the first removed row gives the rightmost factor."""
    path, _ = phi_inverse_trace(rc, order)
    return path


def remove_row(rc, flat_index):
    """Removes a single quantum row; returns (factor tableau, remaining rc)."""
    _check_valid(rc)
    rows = rc.quantum_rows()
    if not 0 <= flat_index < len(rows):
        raise ValueError("no quantum row %d" % flat_index)
    state = _State(rc)
    level = rows[flat_index][1]
    tab, _ = _remove_row(state, level, state.position(level, flat_index))
    return tab, _to_rc(state, rc)


def removal_order_equivalence(rc, row_a, row_b):
    """Removes row_a then row_b and the other way round; True iff the two
    factor pairs correspond under the combinatorial R."""
    if row_a == row_b:
        raise ValueError("rows must be distinct")
    a1, rc1 = remove_row(rc, row_a)
    b1, _ = remove_row(rc1, row_b - 1 if row_b > row_a else row_b)
    b2, rc2 = remove_row(rc, row_b)
    a2, _ = remove_row(rc2, row_a - 1 if row_a > row_b else row_a)
    return apply_R(TensorPair(b1, a1)) == TensorPair(a2, b2)
