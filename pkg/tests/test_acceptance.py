"""Acceptance harness: eight criteria, one printed pass/fail line each.

Each test collects its sub-check failures and prints a single summary
line `ACCEPTANCE <n> (<name>): PASS|FAIL [details]` before asserting.
Estimator-based criteria use bracket proximity: the bracket must either
contain the target or have both endpoints within the stated tolerance of
it (monotone colength sequences produce one-sided fit brackets that
approach the limit without straddling it), and the bracket width must be
within tolerance.
"""

import itertools
from fractions import Fraction

from hkrees import checks
from hkrees import closed_forms as cf
from hkrees import lattice, presets
from hkrees.engine import (
    MonomialOrderSpec,
    PresentedQuotient,
    PureDifferenceBinomial,
    buchberger,
    frobenius_colength,
    initial_ideal,
)
from hkrees.estimator import ColengthSample, estimate
from hkrees.exact import factorial, stirling2, stirling2_by_sum, binomial

from test_exact import STIRLING_TABLE

LEX = MonomialOrderSpec("lex")
SP = cf.SegreParams
VP = cf.VeroneseParams


def report(number, name, failures):
    status = "PASS" if not failures else "FAIL"
    detail = "" if not failures else f" - {failures[0]}" + (
        f" (+{len(failures) - 1} more)" if len(failures) > 1 else ""
    )
    print(f"\nACCEPTANCE {number} ({name}): {status}{detail}")
    assert not failures, failures


def check(failures, ok, message):
    if not ok:
        failures.append(message)


def bracket_ok(est, target, tol):
    near = max(abs(est.bracket[0] - target), abs(est.bracket[1] - target))
    return (est.contains(target) or near <= tol) and est.width() <= tol


def test_acceptance_1_golden_closed_forms():
    failures = []
    golden = {
        (2, 2): Fraction(4, 3),
        (3, 3): Fraction(39, 20),
        (4, 4): Fraction(899, 315),
        (5, 5): Fraction(151205, 36288),
        (6, 6): Fraction(10114043, 1663200),
        (2, 3): Fraction(13, 8),
        (3, 4): Fraction(889, 360),
    }
    for (c, d), value in golden.items():
        got = cf.segre_ehk(SP(c, d))
        check(
            failures,
            got == value,
            f"segre({c},{d}) = {got}, golden table says {value}",
        )
    for n in range(1, 11):
        for k in range(1, 11):
            check(
                failures,
                stirling2(n, k) == STIRLING_TABLE[n - 1][k - 1],
                f"stirling2({n},{k})",
            )
    check(failures, cf.c_of_d(2) == Fraction(4, 3), "c_of_d(2)")
    check(failures, cf.c_of_d(3) == Fraction(13, 8), "c_of_d(3)")
    report(1, "golden closed forms", failures)


def test_acceptance_2_formula_coherence():
    failures = []
    for d in range(2, 13):
        check(
            failures,
            cf.segre_ehk(SP(2, d)) == cf.c_of_d(d),
            f"segre(2,{d}) vs c_of_d({d})",
        )
    for c in range(2, 11):
        check(
            failures,
            cf.veronese_rees_ehk(VP(c, 2)) == c + Fraction(1, 3 * c),
            f"veronese_rees({c},2)",
        )
    for d in range(2, 9):
        for c in range(d, 9):
            check(
                failures,
                cf.veronese_rees_ehk_general(VP(c, d))
                == cf.veronese_rees_ehk(VP(c, d)),
                f"general vs specific at ({c},{d})",
            )
    for d in range(2, 7):
        check(
            failures,
            cf.veronese_rees_ehk_general(VP(1, d)) == cf.c_of_d(d),
            f"general(1,{d}) vs c_of_d({d})",
        )
    for m in range(1, 9):
        for n in range(1, m + 1):
            check(
                failures,
                cf.conca_ehk([m, 1], [n, 1])
                == n + 1 - Fraction(n, m) + Fraction(n, 3 * m * m),
                f"conca([m,1],[n,1]) at ({m},{n})",
            )
    for d in range(2, 7):
        for c in range(d, 7):
            p = VP(c, d)
            assembled = (
                Fraction(c ** (d - 1) * 2 ** (d + 1), factorial(d + 1))
                + cf.veronese_I_limits(p, max(2 * c, c + d), 1)
                - 2 * cf.veronese_I_limits(p, 2 * c, 0)
                + cf.veronese_I_limits(p, 2 * c, 1)
            )
            check(
                failures,
                assembled == cf.veronese_rees_ehk(p),
                f"assembly at ({c},{d})",
            )
    report(2, "formula coherence", failures)


def test_acceptance_3_inequality_suites():
    failures = []
    for suite in ("lemma13", "theorem2", "cor54", "theorem1"):
        for r in checks.run_suite(suite):
            check(failures, r.status != "fail", r.check_id)
    report(3, "inequality suites", failures)


def test_acceptance_4_oracle_convergence():
    failures = []

    def engine_samples(p, qs):
        return [ColengthSample(q, frobenius_colength(p, q, LEX)) for q in qs]

    xy_z2 = PresentedQuotient(
        ("x", "y", "z"),
        (PureDifferenceBinomial((1, 1, 0), (0, 0, 2)),),
        (),
        2,
    )
    est = estimate(engine_samples(xy_z2, (8, 16, 32)), 2)
    check(
        failures,
        est.contains(Fraction(3, 2)) and est.width() <= Fraction(5, 100),
        f"engine xy-z^2 bracket {est.bracket}",
    )

    est = estimate(
        [ColengthSample(q, lattice.segre_colength(2, 2, q)) for q in (8, 16, 32, 64)],
        3,
    )
    check(
        failures,
        bracket_ok(est, Fraction(4, 3), Fraction(5, 100)),
        f"segre(2,2) bracket {est.bracket}",
    )

    p = presets.veronese_rees(2, 2)
    est = estimate([p.sample(q) for q in (4, 8, 16)], 3)  # effective q <= 32
    check(
        failures,
        bracket_ok(est, Fraction(13, 6), Fraction(1, 10)),
        f"veronese-rees(2,2) bracket {est.bracket}",
    )

    s = lattice.semigroup_binomial_an(2)
    est = estimate(
        [ColengthSample(q, lattice.semigroup_extrees_colength(s, q)) for q in (12, 24, 48)],
        3,
    )
    check(
        failures,
        est.contains(Fraction(3, 2)) and est.width() <= Fraction(1, 10),
        f"A_2 extended-Rees bracket {est.bracket}",
    )
    report(4, "oracle convergence", failures)


def test_acceptance_5_cross_oracle_equality():
    failures = []
    abcd = PresentedQuotient(
        ("a", "b", "c", "d"),
        (PureDifferenceBinomial((1, 1, 0, 0), (0, 0, 1, 1)),),
        (),
        3,
    )
    for q in (2, 4, 8):
        check(
            failures,
            lattice.segre_colength(2, 2, q) == frobenius_colength(abcd, q, LEX),
            f"segre vs engine at q={q}",
        )
    xy_z2 = PresentedQuotient(
        ("x", "y", "z"),
        (PureDifferenceBinomial((1, 1, 0), (0, 0, 2)),),
        (),
        2,
    )
    s = lattice.Semigroup2D(((0, 2), (1, 1), (2, 0)))
    for q in (2, 4, 8):
        check(
            failures,
            lattice.semigroup_ehk_colength(s, q)
            == frobenius_colength(xy_z2, q, LEX),
            f"semigroup vs engine at q={q}",
        )
    report(5, "cross-oracle equality", failures)


def test_acceptance_6_groebner_reproduction():
    failures = []
    m = n = 2
    q = 8
    p = presets.ci_extrees_presentation(m, n)
    powers = tuple(
        tuple(q if j == i else 0 for j in range(5)) for i in range(5)
    )
    gb = buchberger(p, LEX, extra_monomials=powers)
    computed = set(initial_ideal(gb, LEX))

    c, d = q // m, q // n

    def displayed_leads(last_exponent):
        # leading terms of the displayed basis; the final (wt)-power is
        # printed with exponent c+1 but is suspected to mean d+1, so both
        # readings are compared
        gens = [
            (m, 0, 0, 0, 0),  # in(x^m - zt)
            (0, n, 0, 0, 0),  # in(y^n - wt)
            (0, 0, q, 0, 0),
            (0, 0, 0, q, 0),
            (0, 0, 0, 0, q),
            (q - c * m, 0, c, 0, c),
            (0, q - d * n, 0, d, d),
            (0, 0, c + 1, 0, c + 1),
            (0, 0, 0, last_exponent, last_exponent),
        ]
        minimal = []
        for g in sorted(gens, key=sum):
            if not any(all(x <= y for x, y in zip(h, g)) for h in minimal):
                minimal.append(g)
        return set(minimal)

    matches = {
        "printed (c+1)": displayed_leads(c + 1) == computed,
        "suspected (d+1)": displayed_leads(d + 1) == computed,
    }
    matching = [k for k, v in matches.items() if v]
    print(f"\n  groebner readings matching the computed basis: "
          f"{', '.join(matching) or 'none'}")
    check(failures, bool(matching), f"no reading matches {sorted(computed)}")
    report(6, "groebner reproduction", failures)


def test_acceptance_7_criterion():
    failures = []
    for c in range(2, 6):
        check(
            failures,
            lattice.equality_criterion(lattice.semigroup_veronese(c)),
            f"criterion should hold on veronese({c})",
        )
    for n in range(2, 6):
        check(
            failures,
            not lattice.equality_criterion(lattice.semigroup_double_point(n)),
            f"criterion should fail on A_{n}",
        )

    def brackets(s):
        qs = (12, 24, 48)
        base = estimate(
            [ColengthSample(q, lattice.semigroup_ehk_colength(s, q)) for q in qs],
            2,
        ).bracket
        ext = estimate(
            [
                ColengthSample(q, lattice.semigroup_extrees_colength(s, q))
                for q in qs
            ],
            3,
        ).bracket
        return base, ext

    b, e = brackets(lattice.semigroup_veronese(2))
    check(
        failures,
        b[0] <= e[1] and e[0] <= b[1],
        f"true case: brackets {b} and {e} should overlap",
    )
    b, e = brackets(lattice.semigroup_double_point(2))
    check(
        failures,
        b[1] < e[0] or e[1] < b[0],
        f"false case: brackets {b} and {e} should be disjoint",
    )
    report(7, "equality criterion", failures)


def test_acceptance_8_property_suites():
    failures = []
    for n in range(31):
        for k in range(n + 1):
            check(
                failures,
                stirling2(n, k) == stirling2_by_sum(n, k),
                f"stirling dual paths at ({n},{k})",
            )
    for c in range(1, 13):
        for n in range(c):
            total = sum(
                (-1) ** i * binomial(c, i) * i**n for i in range(c + 1)
            )
            check(failures, total == 0, f"vanishing sum at ({c},{n})")

    # closure invariant and order independence over a presentation corpus
    corpus = [
        PresentedQuotient(
            ("x", "y", "z"),
            (PureDifferenceBinomial((1, 1, 0), (0, 0, k)),),
            (),
            2,
        )
        for k in (2, 3, 4)
    ] + [
        presets.ci_extrees_presentation(2, 2),
        presets.ci_extrees_presentation(3, 2),
        PresentedQuotient(
            ("a", "b", "c", "d"),
            (PureDifferenceBinomial((1, 1, 0, 0), (0, 0, 1, 1)),),
            (),
            3,
        ),
    ]
    for p in corpus:
        counts = set()
        for order in (LEX, MonomialOrderSpec("grevlex")):
            try:
                counts.add(frobenius_colength(p, 4, order))
            except Exception as exc:  # closure violations surface here
                check(failures, False, f"engine raised {exc!r} on {p.variables}")
        check(
            failures,
            len(counts) == 1,
            f"order-dependent colength on {p.variables}: {counts}",
        )

    for a, b, dim in [(2, 0, 3), (3, 5, 2), (1, 7, 4)]:
        samples = [
            ColengthSample(q, a * q**dim + b * q ** (dim - 1))
            for q in (2, 4, 8, 16)
        ]
        est = estimate(samples, dim)
        check(
            failures,
            est.leading == a and est.bracket == (Fraction(a), Fraction(a)),
            f"estimator not exact on synthetic ({a},{b},{dim})",
        )
    report(8, "property suites", failures)
