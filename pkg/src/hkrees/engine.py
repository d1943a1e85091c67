"""Buchberger engine for ideals generated by monomials and pure-difference
binomials (two monomials with coefficients +1/-1).

This class of generating sets is closed under S-pairs and reduction: every
intermediate element is again a monomial or a pure difference, so no field
arithmetic is needed and every computed colength is independent of the
characteristic.  Frobenius colengths are obtained as standard-monomial
counts of the initial ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ClosureError, DimensionError, ParameterError

Monomial = tuple[int, ...]
# An element is (lead, tail): tail is None for a monomial, otherwise the
# smaller monomial of a pure difference lead - tail.
Element = tuple[Monomial, Monomial | None]


@dataclass(frozen=True)
class MonomialOrderSpec:
    """A lex or graded-reverse-lex order; permutation[0] is the largest variable."""

    kind: str = "lex"
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ParameterError(f"unknown order kind {self.kind!r}")
        if self.permutation is not None:
            if sorted(self.permutation) != list(range(len(self.permutation))):
                raise ParameterError(f"not a permutation: {self.permutation}")

    def key(self, m: Monomial):
        perm = self.permutation or tuple(range(len(m)))
        if self.kind == "lex":
            return tuple(m[i] for i in perm)
        return (sum(m), tuple(-m[i] for i in reversed(perm)))


@dataclass(frozen=True)
class PureDifferenceBinomial:
    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if self.plus == self.minus:
            raise ParameterError("binomial with equal terms is zero")
        if len(self.plus) != len(self.minus):
            raise ParameterError("mismatched variable counts")


@dataclass(frozen=True)
class PresentedQuotient:
    """A graded quotient ring: variables, pure-difference binomial relations,
    monomial relations, and its declared Krull dimension."""

    variables: tuple[str, ...]
    binomials: tuple[PureDifferenceBinomial, ...] = ()
    monomials: tuple[Monomial, ...] = ()
    dimension: int = 1

    def __post_init__(self):
        if len(self.variables) < 1:
            raise ParameterError("need at least one variable")
        if self.dimension < 1:
            raise ParameterError("dimension must be >= 1")


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _check_closure(e: Element) -> Element:
    lead, tail = e
    if any(x < 0 for x in lead) or (tail is not None and any(x < 0 for x in tail)):
        raise ClosureError(f"negative exponent in {e}")
    if tail is not None and lead == tail:
        raise ClosureError(f"unnormalized zero element {e}")
    return e


def _make_element(u: Monomial, v: Monomial | None, order: MonomialOrderSpec) -> Element | None:
    """Sign-normalize; None means the element reduced to zero."""
    if v is None:
        return (u, None)
    if u == v:
        return None
    if order.key(u) < order.key(v):
        u, v = v, u
    return (u, v)


def reduce(element: Element, basis: list[Element], order: MonomialOrderSpec) -> Element | None:
    """Full normal form of a monomial or pure-difference element.

    Reduction by a binomial rewrites a term along the relation; reduction by
    a monomial deletes a term.  Either way the result stays in the
    monomial/pure-difference class (coefficients stay +-1), which is what
    keeps the whole engine characteristic-free.
    """
    current: Element | None = element
    while current is not None:
        lead, tail = current
        for bl, bt in basis:
            if _divides(bl, lead):
                if bt is None:
                    current = (tail, None) if tail is not None else None
                else:
                    current = _make_element(_add(_sub(lead, bl), bt), tail, order)
                break
            if tail is not None and _divides(bl, tail):
                if bt is None:
                    current = (lead, None)
                else:
                    # replacement term is strictly below tail, so lead stays lead
                    current = _make_element(lead, _add(_sub(tail, bl), bt), order)
                break
        else:
            return _check_closure(current)
        if current is not None:
            _check_closure(current)
    return None


def _s_pair(f: Element, g: Element, order: MonomialOrderSpec) -> Element | None:
    """S-polynomial of two elements; None when it is zero or the coprimality
    criterion applies."""
    (lf, tf), (lg, tg) = f, g
    if tf is None and tg is None:
        return None
    lcm = _lcm(lf, lg)
    if lcm == _add(lf, lg):  # coprime leading terms: S-pair reduces to zero
        return None
    if tf is None:
        return (_add(_sub(lcm, lg), tg), None)
    if tg is None:
        return (_add(_sub(lcm, lf), tf), None)
    return _make_element(_add(_sub(lcm, lf), tf), _add(_sub(lcm, lg), tg), order)


def buchberger(p: PresentedQuotient, order: MonomialOrderSpec,
               extra_monomials: tuple[Monomial, ...] = ()) -> list[Element]:
    """Reduced Groebner basis of the presentation ideal (plus any extra
    monomial generators, e.g. Frobenius powers)."""
    gens: list[Element] = []
    for b in p.binomials:
        e = _make_element(b.plus, b.minus, order)
        if e is not None:
            gens.append(_check_closure(e))
    for m in tuple(p.monomials) + tuple(extra_monomials):
        gens.append(_check_closure((m, None)))

    basis: list[Element] = []
    for g in gens:
        r = reduce(g, basis, order)
        if r is not None:
            basis.append(r)

    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    pairs.sort(key=lambda ij: sum(_lcm(basis[ij[0]][0], basis[ij[1]][0])))
    while pairs:
        i, j = pairs.pop(0)
        s = _s_pair(basis[i], basis[j], order)
        if s is None:
            continue
        r = reduce(s, basis, order)
        if r is None:
            continue
        basis.append(r)
        k = len(basis) - 1
        pairs.extend((k, t) for t in range(k))
        pairs.sort(key=lambda ij: sum(_lcm(basis[ij[0]][0], basis[ij[1]][0])))

    return _autoreduce(basis, order)


def _autoreduce(basis: list[Element], order: MonomialOrderSpec) -> list[Element]:
    """Inter-reduce to the unique reduced basis, sorted by leading term."""
    changed = True
    current = list(basis)
    while changed:
        changed = False
        for i in range(len(current)):
            others = current[:i] + current[i + 1 :]
            r = reduce(current[i], others, order)
            if r != current[i]:
                changed = True
                if r is None:
                    current = others
                else:
                    current = others + [r]
                break
    current.sort(key=lambda e: order.key(e[0]))
    return current


def initial_ideal(gb: list[Element], order: MonomialOrderSpec) -> list[Monomial]:
    """Minimal monomial generators of the initial ideal of a Groebner basis."""
    leads = sorted({e[0] for e in gb}, key=sum)
    minimal: list[Monomial] = []
    for m in leads:
        if not any(_divides(g, m) for g in minimal):
            minimal.append(m)
    minimal.sort()
    return minimal


def count_standard_monomials(gens: list[Monomial]) -> int:
    """Number of monomials outside the monomial ideal given by `gens`.

    Requires a pure power of every variable among the generators (so the
    count is finite); counts by pruned traversal of the bounding box.
    """
    if not gens:
        raise DimensionError("empty generating set has infinite colength")
    nvars = len(gens[0])
    bounds = [None] * nvars
    for g in gens:
        support = [i for i, e in enumerate(g) if e > 0]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
    missing = [i for i, b in enumerate(bounds) if b is None]
    if missing:
        raise DimensionError(
            f"no pure-power generator for variable index(es) {missing}; "
            "quotient is not Artinian"
        )

    def count(idx: int, active: list[Monomial]) -> int:
        if not active:  # nothing can divide any extension: full box remains
            total = 1
            for b in bounds[idx:]:
                total *= b
            return total
        if idx == nvars:
            return 0  # some generator fully divides the chosen point
        total = 0
        for e in range(bounds[idx]):
            nxt = [g for g in active if g[idx] <= e]
            if any(all(x == 0 for x in g[idx + 1 :]) for g in nxt):
                continue  # already divisible regardless of later choices
            total += count(idx + 1, nxt)
        return total

    return count(0, list(gens))


def frobenius_colength(p: PresentedQuotient, q: int,
                       order: MonomialOrderSpec | None = None) -> int:
    """Colength of the q-th bracket power of the maximal ideal of the
    presented quotient, via Groebner basis and standard-monomial count."""
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    if order is None:
        order = MonomialOrderSpec("lex")
    nvars = len(p.variables)
    powers = tuple(
        tuple(q if j == i else 0 for j in range(nvars)) for i in range(nvars)
    )
    gb = buchberger(p, order, extra_monomials=powers)
    return count_standard_monomials(initial_ideal(gb, order))


# ---------------------------------------------------------------------------
# Presentation text format


def parse_monomial(text: str, variables: list[str]) -> Monomial:
    """Parse `x^2*y` style monomial text against a variable list."""
    expo = [0] * len(variables)
    for factor in text.replace(" ", "").split("*"):
        if not factor:
            raise ParameterError(f"empty factor in monomial {text!r}")
        if "^" in factor:
            name, _, power = factor.partition("^")
            e = int(power)
        else:
            name, e = factor, 1
        if name not in variables:
            raise ParameterError(f"unknown variable {name!r} in {text!r}")
        if e < 0:
            raise ParameterError(f"negative exponent in {text!r}")
        expo[variables.index(name)] += e
    return tuple(expo)


def parse_presentation(text: str) -> tuple[PresentedQuotient, MonomialOrderSpec | None]:
    """Parse the line-oriented presentation format:

        vars: x y z w t
        bin: x^2*y - z^3
        mono: x^4
        dim: 3
        order: lex x>y>z>w>t
    """
    variables: list[str] = []
    binomials: list[PureDifferenceBinomial] = []
    monomials: list[Monomial] = []
    dimension = None
    order = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tag, _, rest = line.partition(":")
        tag, rest = tag.strip(), rest.strip()
        if tag == "vars":
            variables = rest.split()
        elif tag == "bin":
            parts = rest.split("-")
            if len(parts) != 2:
                raise ParameterError(
                    f"binomial must be a pure difference of two monomials: {rest!r}"
                )
            binomials.append(
                PureDifferenceBinomial(
                    parse_monomial(parts[0], variables),
                    parse_monomial(parts[1], variables),
                )
            )
        elif tag == "mono":
            monomials.append(parse_monomial(rest, variables))
        elif tag == "dim":
            dimension = int(rest)
        elif tag == "order":
            kind, _, chain = rest.partition(" ")
            perm = None
            if chain.strip():
                names = [v.strip() for v in chain.split(">")]
                if sorted(names) != sorted(variables):
                    raise ParameterError(f"order chain {chain!r} does not match vars")
                perm = tuple(variables.index(v) for v in names)
            order = MonomialOrderSpec(kind, perm)
        else:
            raise ParameterError(f"unknown line tag {tag!r}")
    if not variables:
        raise ParameterError("presentation has no vars: line")
    if dimension is None:
        raise ParameterError("presentation has no dim: line")
    pq = PresentedQuotient(
        tuple(variables), tuple(binomials), tuple(monomials), dimension
    )
    return pq, order


def format_monomial(m: Monomial, variables: tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
