"""Rigged configurations: quantum space, configurations, vacancy numbers, riggings.

A rigged configuration over rank n holds the quantum space nu^(0..n-1)
(ordered rows, each optionally tagged with the path factor it came from) and
configurations mu^(1..n) whose rows carry integer riggings. Levels are
indexed by a; Q and vacancy follow the usual conventions with level 0 and
n+1 contributions equal to zero.
"""

from collections import Counter, namedtuple

RowRef = namedtuple("RowRef", ["level", "index"])


class RiggedConfiguration:
    """Immutable rigged configuration.

    Args:
        rank_n: rank n >= 1.
        nu: quantum space; sequence of n levels (a = 0..n-1), each an ordered
            sequence of positive row lengths.
        mu: configurations; sequence of n levels (a = 1..n), each a sequence
            of (length, rigging) pairs with length >= 1.
        origins: optional, mirrors nu; origins[a][i] is the 1-based path
            factor index the row came from, or None when unknown.
    """

    __slots__ = ("rank_n", "nu", "mu", "origins")

    def __init__(self, rank_n, nu, mu, origins=None):
        if rank_n < 1:
            raise ValueError("rank_n must be >= 1")
        nu = tuple(tuple(int(x) for x in level) for level in nu)
        mu = tuple(tuple((int(m), int(r)) for m, r in level) for level in mu)
        if len(nu) != rank_n:
            raise ValueError("quantum space must have %d levels" % rank_n)
        if len(mu) != rank_n:
            raise ValueError("configurations must have %d levels" % rank_n)
        for level in nu:
            for x in level:
                if x < 1:
                    raise ValueError("quantum space row lengths must be >= 1")
        for level in mu:
            for m, _ in level:
                if m < 1:
                    raise ValueError("configuration row lengths must be >= 1")
        if origins is None:
            origins = tuple((None,) * len(level) for level in nu)
        else:
            origins = tuple(tuple(level) for level in origins)
            if tuple(len(level) for level in origins) != tuple(len(level) for level in nu):
                raise ValueError("origins must mirror the quantum space")
        object.__setattr__(self, "rank_n", rank_n)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "origins", origins)

    def __setattr__(self, name, value):
        raise AttributeError("RiggedConfiguration is immutable")

    def __eq__(self, other):
        """Equality: ordered quantum space plus per-level multisets of (length, rigging)."""
        if not isinstance(other, RiggedConfiguration):
            return NotImplemented
        return (
            self.rank_n == other.rank_n
            and self.nu == other.nu
            and all(
                Counter(a) == Counter(b) for a, b in zip(self.mu, other.mu)
            )
        )

    def __hash__(self):
        return hash(
            (self.rank_n, self.nu, tuple(tuple(sorted(level)) for level in self.mu))
        )

    def __repr__(self):
        return "RiggedConfiguration(n=%d, nu=%s, mu=%s)" % (
            self.rank_n,
            [list(level) for level in self.nu],
            [[(m, r) for m, r in level] for level in self.mu],
        )

    def quantum_rows(self):
        """All quantum-space rows as (flat_index, level, position, length, origin)."""
        out = []
        flat = 0
        for a, level in enumerate(self.nu):
            for i, length in enumerate(level):
                out.append((flat, a, i, length, self.origins[a][i]))
                flat += 1
        return out


def q_l(rc, a, l):
    """Boxes of mu^(a) in the first l columns; zero for a = 0 and a = n+1."""
    if a == 0 or a == rc.rank_n + 1:
        return 0
    if not 1 <= a <= rc.rank_n:
        raise ValueError("level out of range")
    return sum(min(l, m) for m, _ in rc.mu[a - 1])


def vacancy(rc, a, l):
    """p_l^(a) = sum min(l, nu^(a-1)) + Q_l^(a-1) - 2 Q_l^(a) + Q_l^(a+1)."""
    if not 1 <= a <= rc.rank_n:
        raise ValueError("level out of range")
    base = sum(min(l, x) for x in rc.nu[a - 1])
    return base + q_l(rc, a - 1, l) - 2 * q_l(rc, a, l) + q_l(rc, a + 1, l)


def _row(rc, ref):
    level = rc.mu[ref.level - 1]
    if not 0 <= ref.index < len(level):
        raise ValueError("no such row: %r" % (ref,))
    return level[ref.index]


def is_singular(rc, ref):
    """True iff the row's rigging equals its vacancy number."""
    m, r = _row(rc, ref)
    return vacancy(rc, ref.level, m) == r


def corigging(rc, ref):
    """Vacancy minus rigging."""
    m, r = _row(rc, ref)
    return vacancy(rc, ref.level, m) - r


def validate(rc, mode="restricted"):
    """Returns a list of violations; empty means valid.

    restricted: vacancy numbers non-negative and 0 <= rigging <= vacancy.
    unrestricted: rigging <= vacancy only.
    """
    if mode not in ("restricted", "unrestricted"):
        raise ValueError("mode must be 'restricted' or 'unrestricted'")
    problems = []
    for a in range(1, rc.rank_n + 1):
        if mode == "restricted":
            # p_l^(a) is constant once l reaches every part in sight
            horizon = [1]
            horizon.extend(rc.nu[a - 1])
            for lev in (a - 1, a, a + 1):
                if 1 <= lev <= rc.rank_n:
                    horizon.extend(m for m, _ in rc.mu[lev - 1])
            for l in range(1, max(horizon) + 1):
                p = vacancy(rc, a, l)
                if p < 0:
                    problems.append("vacancy p_%d^(%d) = %d is negative" % (l, a, p))
        for i, (m, r) in enumerate(rc.mu[a - 1]):
            p = vacancy(rc, a, m)
            if r > p:
                problems.append(
                    "rigging %d exceeds vacancy %d at level %d row %d" % (r, p, a, i + 1)
                )
            if mode == "restricted" and r < 0:
                problems.append("negative rigging %d at level %d row %d" % (r, a, i + 1))
    return problems
