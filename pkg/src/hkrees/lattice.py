"""Direct lattice-point colength counters.

Each counter returns the exact colength of a bracket power as an integer,
computed from explicit graded-piece descriptions: staircase counts for
Segre products, Veronese Rees algebras and Rees algebras of 2D monomial
ideals, and dynamic-programming membership grids for 2D affine semigroup
rings and their extended Rees algebras.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import alpha, alpha_q
from .errors import DimensionError, ParameterError, RankError

# ---------------------------------------------------------------------------
# Segre products


def segre_colength(c: int, d: int, q: int) -> int:
    """Colength of the q-th bracket power of the maximal ideal of the Segre
    product of polynomial rings in c and d variables."""
    if c < 1 or d < 1 or q < 1:
        raise ParameterError(f"need c, d, q >= 1, got ({c}, {d}, {q})")
    top = max(c, d) * (q - 1)
    total = 0
    for n in range(top + 1):
        acq, adq = alpha_q(c, n, q), alpha_q(d, n, q)
        total += alpha(c, n) * adq + acq * alpha(d, n) - acq * adq
    return total


# ---------------------------------------------------------------------------
# Veronese Rees algebras


def veronese_beta(d: int, c: int, n: int, cq: int) -> int:
    """Graded dimension of the degree-c Veronese of d variables modulo the
    bracket power generated by the cq-th powers of the degree-c monomials."""
    q, rem = divmod(cq, c)
    if rem:
        raise ParameterError(f"cq={cq} not divisible by c={c}")
    total = 0
    for l in range(c):
        inner = sum(
            (-1) ** i * math.comb(d, i) * alpha(d, c * (n - l * q - i * q))
            for i in range(d + 1)
        )
        total += alpha(d, l) * inner
    return total


def veronese_rees_colength(c: int, d: int, q: int) -> int:
    """Colength of the cq-th bracket power of the maximal ideal of the Rees
    algebra of the maximal ideal over the degree-c Veronese subring.

    Normalizing by (cq)^(d+1) recovers the closed-form limit.
    """
    if c < 1 or d < 1 or q < 1:
        raise ParameterError(f"need c, d, q >= 1, got ({c}, {d}, {q})")
    cq = c * q
    # beta_{n,cq} vanishes once every alpha argument is negative
    n_top = (c - 1) * q + d * q + 2
    betas = [veronese_beta(d, c, n, cq) for n in range(n_top + 1)]
    while betas[-1] != 0 or betas[-2] != 0:
        n_top += q
        betas += [veronese_beta(d, c, n, cq) for n in range(len(betas), n_top + 1)]
    total = 0
    for n in range(2 * cq - 1):
        a2q = alpha_q(2, n, cq)
        beta_n = alpha(d, c * n)
        beta_ncq = betas[n] if n < len(betas) else 0
        total += a2q * beta_n - a2q * beta_ncq
    for n, b in enumerate(betas):
        total += (n + 1) * b
    return total


# ---------------------------------------------------------------------------
# Monomial ideals in k[x, y] and their Rees algebras


@dataclass(frozen=True)
class MonomialIdeal2D:
    """A monomial ideal in two variables, stored as its minimal staircase:
    generators sorted with x-exponents strictly increasing and y-exponents
    strictly decreasing."""

    gens: tuple[tuple[int, int], ...]

    @staticmethod
    def from_gens(gens) -> "MonomialIdeal2D":
        pts = sorted(set(map(tuple, gens)))
        minimal: list[tuple[int, int]] = []
        best_b = math.inf
        for a, b in pts:  # ascending a: keep only strict drops in b
            if b < best_b:
                minimal.append((a, b))
                best_b = b
        return MonomialIdeal2D(tuple(minimal))

    def is_mprimary(self) -> bool:
        return (
            len(self.gens) > 0
            and self.gens[0][0] == 0
            and self.gens[-1][1] == 0
        )

    def contains(self, a: int, b: int) -> bool:
        return self.threshold(b) <= a

    def threshold(self, b: int) -> int:
        """Least x-exponent t such that (t, b) lies in the ideal (inf if none)."""
        best = math.inf
        for ga, gb in self.gens:
            if gb <= b:
                return ga  # gens sorted by ascending ga, descending gb
        return best

    def multiply(self, other: "MonomialIdeal2D") -> "MonomialIdeal2D":
        return MonomialIdeal2D.from_gens(
            (a1 + a2, b1 + b2) for a1, b1 in self.gens for a2, b2 in other.gens
        )

    def bracket(self, q: int) -> "MonomialIdeal2D":
        return MonomialIdeal2D.from_gens((q * a, q * b) for a, b in self.gens)

    def plus(self, other: "MonomialIdeal2D") -> "MonomialIdeal2D":
        return MonomialIdeal2D.from_gens(self.gens + other.gens)

    def max_y(self) -> int:
        return max(b for _, b in self.gens)


_UNIT = MonomialIdeal2D(((0, 0),))


def _power_list(ideal: MonomialIdeal2D, top: int) -> list[MonomialIdeal2D]:
    powers = [_UNIT]
    for _ in range(top):
        powers.append(powers[-1].multiply(ideal))
    return powers


def quotient_length(num: MonomialIdeal2D, den: MonomialIdeal2D) -> int:
    """Number of lattice points in num but not in den (den must sit inside num
    with finite-dimensional quotient)."""
    rows = max(num.max_y(), den.max_y()) + 1
    stable_num, stable_den = num.threshold(rows), den.threshold(rows)
    if stable_num != stable_den:
        raise DimensionError("quotient of staircases is infinite-dimensional")
    total = 0
    for b in range(rows):
        t1, t2 = num.threshold(b), den.threshold(b)
        if t2 is math.inf:
            if t1 is math.inf:
                continue
            raise DimensionError("quotient of staircases is infinite-dimensional")
        total += t2 - t1
    return total


def rees_monomial_colength(ideal: MonomialIdeal2D, q: int, mode: str) -> int:
    """Colength of the q-th bracket power of (m, It) (mode "maximal-ideal")
    or (I, It) (mode "ideal-power") on the Rees algebra of a 2D m-primary
    monomial ideal, summed over graded pieces until they vanish."""
    if mode not in ("maximal-ideal", "ideal-power"):
        raise ParameterError(f"unknown mode {mode!r}")
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    if not ideal.is_mprimary():
        raise DimensionError(
            "ideal must contain pure powers of both variables (m-primary)"
        )
    m = MonomialIdeal2D(((0, 1), (1, 0)))
    small = m if mode == "maximal-ideal" else ideal
    small_q = small.bracket(q)
    ideal_q = ideal.bracket(q)

    powers = [_UNIT]

    def ipow(n: int) -> MonomialIdeal2D:
        while len(powers) <= n:
            powers.append(powers[-1].multiply(ideal))
        return powers[n]

    total = 0
    for n in range(q):
        total += quotient_length(ipow(n), small_q.multiply(ipow(n)))
    zeros = 0
    n = q
    while zeros < 2:
        if mode == "maximal-ideal":
            den = small_q.multiply(ipow(n)).plus(ideal_q.multiply(ipow(n - q)))
        else:
            den = ideal_q.multiply(ipow(n - q))
        piece = quotient_length(ipow(n), den)
        total += piece
        zeros = zeros + 1 if piece == 0 else 0
        n += 1
    return total


# ---------------------------------------------------------------------------
# 2D affine semigroup rings


@dataclass(frozen=True)
class Semigroup2D:
    """Subsemigroup of Z^2 generated by (a_i, b_i), normalized so that
    a_0 = 0 < a_1 < ... < a_s = a and b_s = 0 < b_{s-1} < ... < b_0 = b."""

    generators: tuple[tuple[int, int], ...]

    def __post_init__(self):
        g = self.generators
        if len(g) < 2:
            raise ParameterError("need at least two generators")
        a_vals = [p[0] for p in g]
        b_vals = [p[1] for p in g]
        if a_vals != sorted(a_vals) or a_vals[0] != 0:
            raise ParameterError(f"a_i must satisfy 0 = a_0 < ... < a_s: {g}")
        if any(x == y for x, y in zip(a_vals, a_vals[1:])):
            raise ParameterError(f"a_i must be strictly increasing: {g}")
        if b_vals != sorted(b_vals, reverse=True) or b_vals[-1] != 0:
            raise ParameterError(f"b_i must satisfy b_s = 0 < ... < b_0: {g}")
        if any(x == y for x, y in zip(b_vals, b_vals[1:])):
            raise ParameterError(f"b_i must be strictly decreasing: {g}")
        if self.index() == 0:
            raise RankError(f"generators do not span a rank-2 lattice: {g}")

    @property
    def a(self) -> int:
        return self.generators[-1][0]

    @property
    def b(self) -> int:
        return self.generators[0][1]

    def index(self) -> int:
        """|Z^2 / ZS|: gcd of the 2x2 minors of the generator matrix."""
        g = self.generators
        minors = [
            abs(g[i][0] * g[j][1] - g[j][0] * g[i][1])
            for i in range(len(g))
            for j in range(i + 1, len(g))
        ]
        return math.gcd(*minors) if minors else 0


def equality_criterion(s: Semigroup2D) -> bool:
    """True iff a_i/a + b_i/b = 1 for every generator (the homogeneity
    condition under which the base and extended-Rees multiplicities agree)."""
    a, b = s.a, s.b
    return all(
        Fraction(ai, a) + Fraction(bi, b) == 1 for ai, bi in s.generators
    )


class _SemigroupGrid:
    """Membership and order-function tables for a semigroup on a bounded grid."""

    def __init__(self, s: Semigroup2D, width: int, height: int):
        self.s = s
        self.width = width
        self.height = height
        gens = s.generators
        NEG = -1
        ordv = [[NEG] * height for _ in range(width)]
        ordv[0][0] = 0
        for x in range(width):
            col = ordv[x]
            for y in range(height):
                best = NEG
                for ga, gb in gens:
                    px, py = x - ga, y - gb
                    if px >= 0 and py >= 0:
                        prev = ordv[px][py]
                        if prev >= 0 and prev + 1 > best:
                            best = prev + 1
                if best > col[y]:
                    col[y] = best
        self.ord = ordv

    def order(self, x: int, y: int) -> int:
        """Largest n with (x, y) in m^n; -1 if (x, y) is not in the semigroup."""
        if 0 <= x < self.width and 0 <= y < self.height:
            return self.ord[x][y]
        raise IndexError((x, y))


def _grid_for(s: Semigroup2D, q: int, margin: int) -> _SemigroupGrid:
    width = q * s.a + margin * max(1, s.a)
    height = q * s.b + margin * max(1, s.b)
    return _SemigroupGrid(s, width + 1, height + 1)


def semigroup_ehk_colength(s: Semigroup2D, q: int) -> int:
    """Number of semigroup elements outside every translate q*g_i + S:
    the colength of the q-th bracket power of the maximal ideal."""
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    margin = (s.a + s.b + 2) ** 2
    while True:
        grid = _grid_for(s, q, margin)
        gens = s.generators
        total = 0
        boundary_hit = False
        bx = grid.width - s.a - 1
        by = grid.height - s.b - 1
        for x in range(grid.width):
            for y in range(grid.height):
                if grid.ord[x][y] < 0:
                    continue
                covered = any(
                    x - q * ga >= 0
                    and y - q * gb >= 0
                    and grid.ord[x - q * ga][y - q * gb] >= 0
                    for ga, gb in gens
                )
                if not covered:
                    total += 1
                    if x >= bx or y >= by:
                        boundary_hit = True
        if not boundary_hit:
            return total
        margin *= 2  # counted region touched the grid edge; enlarge and retry


def semigroup_extrees_colength(s: Semigroup2D, q: int) -> int:
    """Colength of the q-th bracket power of the homogeneous maximal ideal of
    the extended Rees algebra of the maximal ideal of k[S].

    The graded pieces are piecewise in the degree n; each n-range contributes
    per-point counts expressed through the order function ord(s) and
    phi(s) = max_i ord(s - q g_i), aggregated in one grid pass.
    """
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    margin = (s.a + s.b + 2) ** 2
    while True:
        grid = _grid_for(s, q, margin)
        gens = s.generators
        total = 0
        boundary_hit = False
        bx = grid.width - s.a - 1
        by = grid.height - s.b - 1
        for x in range(grid.width):
            for y in range(grid.height):
                o = grid.ord[x][y]
                if o < 0:
                    continue
                phi = -1
                for ga, gb in gens:
                    px, py = x - q * ga, y - q * gb
                    if px >= 0 and py >= 0 and grid.ord[px][py] > phi:
                        phi = grid.ord[px][py]
                contrib = 0
                # degrees -q < n < 0: point counts against l(A/m^{n+q})
                if o <= q - 2:
                    contrib += q - 1 - o
                # degrees 0 <= n <= q-1: point survives iff outside m^{[q]}
                if phi < 0:
                    contrib += min(q - 1, o) - max(0, o - q + 1) + 1
                # degrees n >= q: n ranges over [max(q, phi+q+1, o-q+1), o]
                lo = max(q, phi + q + 1, o - q + 1)
                if o >= lo:
                    contrib += o - lo + 1
                if contrib:
                    total += contrib
                    if x >= bx or y >= by:
                        boundary_hit = True
        if not boundary_hit:
            return total
        margin *= 2


# ---------------------------------------------------------------------------
# Named semigroups and input formats


def semigroup_veronese(c: int) -> Semigroup2D:
    """Degree-c Veronese of k[s, t]: generators (i, c - i)."""
    if c < 1:
        raise ParameterError(f"c must be >= 1, got {c}")
    return Semigroup2D(tuple((i, c - i) for i in range(c + 1)))


def semigroup_binomial_an(n: int) -> Semigroup2D:
    """Semigroup of k[s^n, st, t^n] = k[x,y,z]/(xy - z^n); requires n >= 2."""
    if n < 2:
        raise ParameterError(f"binomial A-type semigroup needs n >= 2, got {n}")
    return Semigroup2D(((0, n), (1, 1), (n, 0)))


def semigroup_double_point(n: int) -> Semigroup2D:
    """Rational double point of type A_n: k[s^{n+1}, st, t^{n+1}]."""
    if n < 1:
        raise ParameterError(f"A_n needs n >= 1, got {n}")
    return semigroup_binomial_an(n + 1)


def parse_semigroup(text: str) -> Semigroup2D:
    """Parse `sg: (3,0) (1,1) (0,3)` (generator order is normalized)."""
    line = text.strip()
    if line.startswith("sg:"):
        line = line[3:]
    pairs = []
    for chunk in line.replace("(", " ").replace(")", " ").split():
        xs = chunk.split(",")
        if len(xs) != 2:
            raise ParameterError(f"bad generator {chunk!r}")
        pairs.append((int(xs[0]), int(xs[1])))
    pairs.sort()
    return Semigroup2D(tuple(pairs))


def parse_monomial_ideal(lines) -> MonomialIdeal2D:
    """Parse `mi: x^2 y^3` lines, one generator per line, variables x and y."""
    gens = []
    for raw in lines if not isinstance(lines, str) else lines.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("mi:"):
            line = line[3:]
        a = b = 0
        for factor in line.split():
            name, _, power = factor.partition("^")
            e = int(power) if power else 1
            if name == "x":
                a += e
            elif name == "y":
                b += e
            else:
                raise ParameterError(f"unknown variable {name!r}")
        gens.append((a, b))
    return MonomialIdeal2D.from_gens(gens)
