"""Paths, carriers, box-ball time evolution, energy matrices and their double differences.

A path is a tensor product b_1 (x) ... (x) b_L of rectangular tableaux. The
time evolution T_l^(a) threads the highest element of B^{a,l} through the
path from the left; the energies collected along the way, doubly differenced,
form the local energy distribution.

Column prefixes: within a factor, the k-th prefix is its rightmost k columns
(left and right are reversed between a factor and its table columns; the
conversion lives here).
"""

from kssbij.rmatrix import TensorPair, apply_R, energy_H
from kssbij.tableaux import Tableau, highest_element


class Path:
    """Ordered tensor product of rectangular tableaux over one alphabet."""

    __slots__ = ("rank_n", "factors")

    def __init__(self, rank_n, factors):
        factors = tuple(factors)
        for b in factors:
            if b.rank_n != rank_n:
                raise ValueError("factor alphabet differs from path alphabet")
            if not b.is_rectangular() or b.is_empty():
                raise ValueError("factors must be non-empty rectangular tableaux")
        object.__setattr__(self, "rank_n", rank_n)
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("Path is immutable")

    def __len__(self):
        return len(self.factors)

    def shapes(self):
        """Per-factor (rows, cols) = (alpha_j, beta_j)."""
        return [(b.n_rows, b.width()) for b in self.factors]

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.rank_n == other.rank_n and self.factors == other.factors

    def __hash__(self):
        return hash((self.rank_n, self.factors))

    def __repr__(self):
        return "Path(n=%d, %s)" % (
            self.rank_n,
            " (x) ".join(repr(b) for b in self.factors),
        )


def column_prefix(b, k):
    """The rightmost k columns of b as a tableau; k = 0 gives the empty tableau."""
    if not 0 <= k <= b.width():
        raise ValueError("prefix width %d out of range 0..%d" % (k, b.width()))
    if k == 0:
        return Tableau(b.rank_n, ())
    return Tableau(b.rank_n, [row[-k:] for row in b.rows])


def carrier_pass(u, b):
    """One R application u (x) b -> b' (x) u'; returns (b', u')."""
    image = apply_R(TensorPair(u, b))
    return image.left, image.right


def carrier_sweep(p, a, l):
    """Threads the carrier u_l^(a) through the whole path.

    Returns (new_factors, carriers) where carriers[j] is the carrier after
    passing the first j factors (carriers[0] is the initial highest element).
    """
    u = highest_element(a, l, p.rank_n)
    carriers = [u]
    out = []
    for b in p.factors:
        b2, u = carrier_pass(u, b)
        out.append(b2)
        carriers.append(u)
    return out, carriers


def time_evolution(p, a, l):
    """The box-ball update T_l^(a) applied to the path."""
    out, _ = carrier_sweep(p, a, l)
    return Path(p.rank_n, out)


class EnergyMatrix:
    """Carrier energies E[l][j][k] of one level a, with zero boundaries.

    E(l, j, k) is the energy of the carrier after j-1 factors against the
    rightmost-k-column prefix of factor j. E(0, j, k) = E(l, j, 0) = 0.
    """

    __slots__ = ("a", "l_max", "betas", "_rows")

    def __init__(self, a, l_max, betas, rows):
        self.a = a
        self.l_max = l_max
        self.betas = tuple(betas)
        self._rows = rows

    def E(self, l, j, k):
        if l == 0 or k == 0:
            return 0
        return self._rows[l - 1][j - 1][k - 1]


def energy_matrix(p, a, l_max):
    """Computes E[l][j][k] for l = 1..l_max over the whole path."""
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    betas = [b.width() for b in p.factors]
    rows = []
    for l in range(1, l_max + 1):
        _, carriers = carrier_sweep(p, a, l)
        row = []
        for j, b in enumerate(p.factors):
            u = carriers[j]
            row.append(
                [energy_H(TensorPair(u, column_prefix(b, k))) for k in range(1, betas[j] + 1)]
            )
        rows.append(row)
    return EnergyMatrix(a, l_max, betas, rows)


class LocalEnergyDistribution:
    """Double differences of carrier energies, one table per level a = 1..n.

    tables[a-1] is a list of rows; row l-1 holds the entries for row l in
    column order columns = [(j, k), ...], lexicographic. Each table ends with
    its first all-zero row. Entries below the stored rows are zero.
    """

    __slots__ = ("rank_n", "alphas", "betas", "columns", "tables")

    def __init__(self, rank_n, alphas, betas, columns, tables):
        self.rank_n = rank_n
        self.alphas = tuple(alphas)
        self.betas = tuple(betas)
        self.columns = list(columns)
        self.tables = tables

    def epsilon(self, a, l, j, k):
        rows = self.tables[a - 1]
        if l > len(rows):
            return 0
        return rows[l - 1][self.columns.index((j, k))]

    def __eq__(self, other):
        # alphas/betas are derived context, not part of the value
        if not isinstance(other, LocalEnergyDistribution):
            return NotImplemented
        return (
            self.rank_n == other.rank_n
            and self.columns == other.columns
            and [[list(r) for r in t] for t in self.tables]
            == [[list(r) for r in t] for t in other.tables]
        )

    def __hash__(self):
        return hash(
            (
                self.rank_n,
                tuple(self.columns),
                tuple(tuple(tuple(r) for r in t) for t in self.tables),
            )
        )


def _energy_row(p, a, l, betas):
    # E[l][.][.] flattened in column order, one carrier sweep
    _, carriers = carrier_sweep(p, a, l)
    out = []
    for j, b in enumerate(p.factors):
        u = carriers[j]
        for k in range(1, betas[j] + 1):
            out.append(energy_H(TensorPair(u, column_prefix(b, k))))
    return out


def local_energy_distribution(p):
    """Tables of epsilon[l][(j,k)] for every level, each cut at its first all-zero row."""
    betas = [b.width() for b in p.factors]
    alphas = [b.n_rows for b in p.factors]
    columns = [(j + 1, k) for j in range(len(betas)) for k in range(1, betas[j] + 1)]
    # column index of (j, k-1), or None when k = 1
    prev_col = []
    for j in range(len(betas)):
        for k in range(1, betas[j] + 1):
            prev_col.append(len(prev_col) - 1 if k > 1 else None)
    cap = 1 + sum(a * b for a, b in zip(alphas, betas))
    tables = []
    for a in range(1, p.rank_n + 1):
        rows = []
        e_prev = [0] * len(columns)
        for l in range(1, cap + 1):
            e_cur = _energy_row(p, a, l, betas)
            row = []
            for c in range(len(columns)):
                d_cur = e_cur[c] - (e_cur[prev_col[c]] if prev_col[c] is not None else 0)
                d_prev = e_prev[c] - (e_prev[prev_col[c]] if prev_col[c] is not None else 0)
                row.append(d_cur - d_prev)
            if any(x < 0 for x in row):
                raise AssertionError("negative local energy entry")
            rows.append(row)
            if not any(row):
                break
            e_prev = e_cur
        else:
            raise AssertionError("no all-zero row within %d rows" % cap)
        tables.append(rows)
    return LocalEnergyDistribution(p.rank_n, alphas, betas, columns, tables)


def total_energy(p, a, l):
    """E_l^(a): summed full-factor carrier energies along the path."""
    _, carriers = carrier_sweep(p, a, l)
    return sum(
        energy_H(TensorPair(carriers[j], b)) for j, b in enumerate(p.factors)
    )
