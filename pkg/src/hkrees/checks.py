"""Inequality and identity suites over the implemented ring families.

Each suite runs a fixed list of exact comparisons (or estimator-bracket
comparisons for limits with no closed form) and returns CheckResult
records.  Report-only checks record observed values without ever failing
a run; they cover comparisons where published reference values are known
to disagree with each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import closed_forms as cf
from . import lattice, presets
from .estimator import estimate
from .exact import factorial, format_fraction

SUITES = (
    "theorem1",
    "theorem2",
    "cor54",
    "prop412",
    "prop57",
    "lemma13",
    "assembly",
    "bcp-compare",
    "all",
)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # pass | fail | report-only
    lhs: str
    rhs: str
    citation: str

    def to_dict(self) -> dict:
        return {
            "id": self.check_id,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "note": self.citation,
        }


def _cmp(check_id: str, ok: bool, lhs, rhs, citation: str) -> CheckResult:
    return CheckResult(
        check_id=check_id,
        status="pass" if ok else "fail",
        lhs=format_fraction(lhs) if isinstance(lhs, (Fraction, int)) else str(lhs),
        rhs=format_fraction(rhs) if isinstance(rhs, (Fraction, int)) else str(rhs),
        citation=citation,
    )


def _report(check_id: str, lhs, rhs, citation: str) -> CheckResult:
    return CheckResult(
        check_id=check_id,
        status="report-only",
        lhs=format_fraction(lhs) if isinstance(lhs, (Fraction, int)) else str(lhs),
        rhs=format_fraction(rhs) if isinstance(rhs, (Fraction, int)) else str(rhs),
        citation=citation,
    )


def suite_theorem1() -> list[CheckResult]:
    """Multiplicity chain on the binomial hypersurface family: the base
    value is at most the extended-Rees value, which is at most e = 2."""
    out = []
    for n in range(2, 11):
        base = cf.conca_ehk([1, 1], [n])
        ext = 2 - Fraction(2 * (n + 1), 3 * n * n)
        out.append(_cmp(
            f"theorem1/chain-n{n}",
            base <= ext <= 2,
            base, ext,
            "hypersurface value <= extended-Rees value <= e",
        ))
    base2 = cf.conca_ehk([1, 1], [2])
    ext2 = 2 - Fraction(2 * 3, 12)
    out.append(_cmp(
        "theorem1/equality-n2",
        base2 == ext2 == Fraction(3, 2),
        base2, ext2,
        "both values equal 3/2 at n = 2",
    ))
    return out


def suite_theorem2() -> list[CheckResult]:
    """Bound for Rees algebras over degree-c Veronese of 2 variables:
    value <= c(2) * e(A), with equality exactly at c = 1."""
    out = []
    bound_const = cf.c_of_d(2)
    for c in range(1, 11):
        val = cf.veronese_rees_ehk_general(cf.VeroneseParams(c, 2))
        bound = bound_const * c
        ok = val <= bound and ((val == bound) == (c == 1))
        out.append(_cmp(
            f"theorem2/veronese-c{c}",
            ok, val, bound,
            "bound with equality only in the regular case",
        ))
    return out


def suite_cor54() -> list[CheckResult]:
    """Strict inequality value < e(A) = c^(d-1) for d in {3, 4}, and the
    large-c ratio approaching (2^(d+1) - 2)/(d+1)!."""
    out = []
    for d in (3, 4):
        lo = d * (d - 1) // 2
        ok = all(
            cf.veronese_rees_ehk_general(cf.VeroneseParams(c, d)) < c ** (d - 1)
            for c in range(lo, 51)
        )
        out.append(_cmp(
            f"cor54/strict-d{d}",
            ok, "value", f"< c^{d - 1} for c = {lo}..50",
            "strict inequality against the base multiplicity",
        ))
        limit = Fraction(2 ** (d + 1) - 2, factorial(d + 1))
        ratio = cf.veronese_rees_ehk_general(
            cf.VeroneseParams(1000, d)
        ) / 1000 ** (d - 1)
        ok = abs(ratio - limit) <= limit / 10
        out.append(_cmp(
            f"cor54/ratio-d{d}",
            ok, ratio, limit,
            "ratio at c = 1000 within 10% of the limit",
        ))
    return out


def suite_prop412() -> list[CheckResult]:
    """Rees-algebra value dominates the base multiplicity, checked with
    estimator brackets on the 2D lattice counters."""
    out = []
    samples = [presets.ci_rees(1, 1).sample(q) for q in (8, 16, 32)]
    est = estimate(samples, 3)
    out.append(_cmp(
        "prop412/polynomial-ring",
        est.leading >= 1,
        est.leading, 1,
        "Rees of the maximal ideal over a 2-variable polynomial ring",
    ))
    for c in (1, 2, 3):
        p = presets.veronese_rees(c, 2)
        est = estimate([p.sample(q) for q in (8, 16, 32)], 3)
        out.append(_cmp(
            f"prop412/veronese-c{c}",
            est.leading >= c,
            est.leading, c,
            "Rees value at least e(A) = c over the degree-c Veronese",
        ))
    return out


def suite_prop57(q_values=(12, 24, 48)) -> list[CheckResult]:
    """Equality criterion a_i/a + b_i/b = 1 for all generators, plus
    bracket overlap/disjointness of the base and extended-Rees estimates
    on one true case and one false case."""
    out = []
    for c in range(2, 6):
        s = lattice.semigroup_veronese(c)
        out.append(_cmp(
            f"prop57/criterion-veronese-c{c}",
            lattice.equality_criterion(s),
            "criterion", "true",
            "Veronese semigroups satisfy the equality criterion",
        ))
    for n in range(2, 6):
        s = lattice.semigroup_double_point(n)
        out.append(_cmp(
            f"prop57/criterion-an-n{n}",
            not lattice.equality_criterion(s),
            "criterion", "false",
            "double-point semigroups fail the criterion for n >= 2",
        ))

    def brackets(s):
        base = estimate(
            [presets.semigroup(s).sample(q) for q in q_values], 2
        ).bracket
        ext = estimate(
            [presets.semigroup_extrees(s).sample(q) for q in q_values], 3
        ).bracket
        return base, ext

    b, e = brackets(lattice.semigroup_veronese(2))
    overlap = b[0] <= e[1] and e[0] <= b[1]
    out.append(_cmp(
        "prop57/brackets-overlap-veronese2",
        overlap,
        f"[{format_fraction(b[0])}, {format_fraction(b[1])}]",
        f"[{format_fraction(e[0])}, {format_fraction(e[1])}]",
        "criterion-true case: base and extended-Rees brackets overlap",
    ))
    b, e = brackets(lattice.semigroup_double_point(2))
    disjoint = b[1] < e[0] or e[1] < b[0]
    out.append(_cmp(
        "prop57/brackets-disjoint-a2",
        disjoint,
        f"[{format_fraction(b[0])}, {format_fraction(b[1])}]",
        f"[{format_fraction(e[0])}, {format_fraction(e[1])}]",
        "criterion-false case: base and extended-Rees brackets disjoint",
    ))
    return out


def suite_lemma13() -> list[CheckResult]:
    """Band e/d! <= e_HK <= e for every family with known multiplicity e."""
    out = []

    def band(check_id, e, d, value, note):
        ok = Fraction(e, factorial(d)) <= value <= e
        out.append(_cmp(check_id, ok, value, e, note))

    for n in range(1, 11):
        band(f"lemma13/an-n{n}", 2, 2, cf.conca_ehk([1, 1], [n]),
             "hypersurface, e = 2, dim 2")
    for n in range(2, 11):
        band(f"lemma13/an-extrees-n{n}", 2, 3,
             2 - Fraction(2 * (n + 1), 3 * n * n),
             "extended Rees of the hypersurface, e = 2, dim 3")
    for m in range(1, 7):
        for n in range(1, m + 1):
            v = cf.ci_rees_values(m, n)
            band(f"lemma13/ci-rees-m{m}n{n}", n + 1, 3, v.ehk_rees,
                 "Rees of (x^m, y^n), e = n + 1, dim 3")
    for d in (2, 3):
        for c in range(1, 7):
            ehk_a = Fraction(cf.alpha(d + 1, c - 1), c)
            band(f"lemma13/veronese-c{c}d{d}", c ** (d - 1), d, ehk_a,
                 "Veronese subring, e = c^(d-1), dim d")
    return out


def suite_assembly() -> list[CheckResult]:
    """Moment-sum assembly reproduces the closed form for c >= d >= 2."""
    out = []
    for d in range(2, 7):
        for c in range(d, 7):
            p = cf.VeroneseParams(c, d)
            lhs = (
                Fraction(c ** (d - 1) * 2 ** (d + 1), factorial(d + 1))
                + cf.veronese_I_limits(p, max(2 * c, c + d), 1)
                - 2 * cf.veronese_I_limits(p, 2 * c, 0)
                + cf.veronese_I_limits(p, 2 * c, 1)
            )
            rhs = cf.veronese_rees_ehk(p)
            out.append(_cmp(
                f"assembly/c{c}d{d}", lhs == rhs, lhs, rhs,
                "moment assembly vs closed form",
            ))
    return out


def suite_bcp_compare() -> list[CheckResult]:
    """Report-only comparison of the two Segre closed forms.  The two
    published references disagree at (4, 4), so nothing here ever fails;
    the observed values are recorded for inspection."""
    out = []
    for c in range(1, 5):
        for d in range(c, 5):
            a = cf.segre_ehk(cf.SegreParams(c, d))
            b = cf.bcp_segre_ehk(cf.SegreParams(c, d))
            tag = " (agree)" if a == b else " (DIFFER)"
            out.append(_report(
                f"bcp-compare/c{c}d{d}",
                a, format_fraction(b) + tag,
                "Stirling-sum formula vs integral formula",
            ))
    return out


def run_suite(name: str, fast: bool = False) -> list[CheckResult]:
    if name == "all":
        results = []
        for s in SUITES[:-1]:
            results.extend(run_suite(s, fast=fast))
        return results
    table = {
        "theorem1": suite_theorem1,
        "theorem2": suite_theorem2,
        "cor54": suite_cor54,
        "prop412": suite_prop412,
        "lemma13": suite_lemma13,
        "assembly": suite_assembly,
        "bcp-compare": suite_bcp_compare,
    }
    if name == "prop57":
        return suite_prop57((8, 16, 32) if fast else (12, 24, 48))
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    return table[name]()
