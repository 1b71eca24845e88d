"""Plain-text renderings: Young layouts, paths, rigged configurations and
bordered local-energy tables. The LED layout is frozen by golden files."""

from kssbij.rigged import vacancy


def _cell_width(t):
    return max(len(str(x)) for row in t.rows for x in row)


def _border(ncells, w):
    return "+" + ("-" * (w + 2) + "+") * ncells


def render_tableau(t):
    """Bordered Young layout; ragged right edges get ragged borders."""
    if t.is_empty():
        return "(empty tableau)"
    w = _cell_width(t)
    lens = [len(row) for row in t.rows]
    lines = [_border(lens[0], w)]
    for i, row in enumerate(t.rows):
        lines.append("".join("| %s " % str(x).rjust(w) for x in row) + "|")
        below = lens[i + 1] if i + 1 < len(lens) else 0
        lines.append(_border(max(lens[i], below), w))
    return "\n".join(lines)


def _hjoin(tableaux):
    blocks = [render_tableau(b).split("\n") for b in tableaux]
    height = max(len(b) for b in blocks)
    mid = (height - 1) // 2
    for b in blocks:
        width = max(len(line) for line in b)
        b.extend([""] * (height - len(b)))
        b[:] = [line.ljust(width) for line in b]
    lines = []
    for i in range(height):
        sep = " (x) " if i == mid else "     "
        lines.append(sep.join(b[i] for b in blocks).rstrip())
    return "\n".join(lines)


def render_path(p):
    """Factors side by side, joined by (x) on the middle line."""
    if not p.factors:
        return "(empty path)"
    return _hjoin(p.factors)


def render_pair(left, right):
    return _hjoin([left, right])


def render_rc(rc):
    """Quantum-space rows, then each level's rows with vacancy numbers on the
    left and riggings on the right, longest rows first."""
    lines = []
    for a0, level in enumerate(rc.nu):
        parts = []
        for i, m in enumerate(level):
            org = rc.origins[a0][i]
            parts.append(str(m) if org is None else "%d<%d>" % (m, org))
        lines.append("nu^(%d): %s" % (a0, " ".join(parts) if parts else "-"))
    for a in range(1, rc.rank_n + 1):
        lines.append("mu^(%d):" % a)
        rows = sorted(rc.mu[a - 1], key=lambda t: -t[0])
        if not rows:
            lines.append("  (no rows)")
            continue
        pw = max(len(str(vacancy(rc, a, m))) for m, _ in rows)
        mw = max(m for m, _ in rows)
        for m, r in rows:
            p = vacancy(rc, a, m)
            lines.append(
                "  %s |%s| %d" % (str(p).rjust(pw), ("#" * m).ljust(mw), r)
            )
    return "\n".join(lines)


def _led_groups(columns):
    groups = []
    for c, (j, _) in enumerate(columns):
        if groups and columns[groups[-1][-1]][0] == j:
            groups[-1].append(c)
        else:
            groups.append([c])
    return groups


def render_led_table(led, a):
    """One level's table; vertical bars separate factor column groups."""
    columns = led.columns
    if not columns:
        return "(no columns)"
    rows = led.tables[a - 1]
    groups = _led_groups(columns)
    widths = [
        max([1] + [len(str(row[c])) for row in rows]) for c in range(len(columns))
    ]
    border = "+"
    for idxs in groups:
        inner = sum(widths[c] for c in idxs) + (len(idxs) - 1) + 2
        border += "-" * inner + "+"
    lines = [border]
    for row in rows:
        cells = [
            " ".join(str(row[c]).rjust(widths[c]) for c in idxs) for idxs in groups
        ]
        lines.append("| " + " | ".join(cells) + " |")
    lines.append(border)
    return "\n".join(lines)


def render_led(led):
    parts = []
    for a in range(1, led.rank_n + 1):
        parts.append("a=%d:\n%s" % (a, render_led_table(led, a)))
    return "\n\n".join(parts)
