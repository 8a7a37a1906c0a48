"""Self-verification harness: every module's invariants as named, seeded checks.

A report is deterministic for a fixed seed (no timing, no environment), so
repeated runs are bit-identical.  The suites mirror the library's contracts:
exact substitution checks, definiteness fuzz, Weyl invariance, cone
consistency, decomposition laws, and the body identities (area, rescaling,
nesting, table values).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bodies import (
    body_L,
    dissection,
    nagata_strip,
    okounkov_body,
    rescale,
    seshadri_body,
)
from .cones import (
    cone_model,
    is_ample,
    is_big,
    is_nef,
    is_pseudoeffective,
    mu_threshold,
    seshadri,
)
from .lattice import (
    DivisorClass,
    canonical_class,
    e0,
    exceptional,
    expected_genus,
    intersect,
    self_intersection,
    uniform_class,
)
from .linalg import is_negative_definite, solve_linear
from .polygon import Polygon
from .scalars import QuadraticNumber
from .simplex import cone_exit_threshold, cone_member
from .weyl import (
    Reflection,
    apply,
    cremona_reduce,
    degree_histogram,
    exceptional_classes,
    exceptional_classes_diophantine,
    orbit,
    satisfies_noether_inequality,
    simple_reflections,
)
from .zariski import null_set, zariski_decompose

SUITES = ("exactlin", "lattice", "weyl", "cones", "zariski", "okounkov", "tables")


@dataclass
class CheckResult:
    check_id: str
    status: str  # "PASS" | "FAIL"
    expected: str
    actual: str


@dataclass
class VerificationReport:
    suite: str
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "PASS" for c in self.checks)

    def record(self, check_id: str, expected, actual):
        ok = expected == actual
        self.checks.append(
            CheckResult(check_id, "PASS" if ok else "FAIL", repr(expected), repr(actual))
        )

    def render(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed})"]
        for c in self.checks:
            lines.append(f"  {c.status} {c.check_id}  expected={c.expected} actual={c.actual}")
        n_fail = sum(1 for c in self.checks if c.status == "FAIL")
        lines.append(
            f"  {len(self.checks)} checks, {n_fail} failures"
        )
        return "\n".join(lines)


def _random_rational(rng, num=6, den=4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _random_class(rng, n, num=6, den=4) -> DivisorClass:
    return DivisorClass(
        n, _random_rational(rng, num, den), tuple(_random_rational(rng, num, den) for _ in range(n))
    )


def _random_psef(rng, n, terms=4) -> DivisorClass:
    gens = cone_model(n).generators
    D = Fraction(rng.randint(0, 2), 1) * e0(n)
    for _ in range(rng.randint(1, terms)):
        D = D + Fraction(rng.randint(0, 5), rng.randint(1, 4)) * rng.choice(gens)
    return D


def _random_big(rng, n, terms=4) -> DivisorClass:
    D = Fraction(rng.randint(1, 3), rng.randint(1, 2)) * e0(n)
    gens = cone_model(n).generators
    for _ in range(rng.randint(0, terms)):
        D = D + Fraction(rng.randint(0, 3), rng.randint(1, 3)) * rng.choice(gens)
    return D


# -- suites ----------------------------------------------------------------


def _suite_exactlin(report, rng):
    for trial in range(25):
        k = rng.randint(1, 5)
        mat = [[_random_rational(rng) for _ in range(k)] for _ in range(k)]
        rhs = [_random_rational(rng) for _ in range(k)]
        try:
            xs = solve_linear(mat, rhs)
        except Exception:
            continue
        back = [sum(row[j] * xs[j] for j in range(k)) for row in mat]
        report.record(f"solve.substitute.{trial}", [Fraction(v) for v in rhs], [Fraction(v) for v in back])

    negdef_hits = 0
    for trial in range(40):
        k = rng.randint(1, 4)
        mat = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                mat[i][j] = mat[j][i] = rng.randint(-3, 3)
        if is_negative_definite(mat):
            negdef_hits += 1
            bad = None
            for _ in range(30):
                x = [rng.randint(-4, 4) for _ in range(k)]
                if any(x):
                    q = sum(x[i] * mat[i][j] * x[j] for i in range(k) for j in range(k))
                    if q >= 0:
                        bad = (x, q)
            report.record(f"negdef.fuzz.{trial}", None, bad)
    report.record("negdef.sampled", True, negdef_hits > 0)

    gens = [(0, 1), (1, -1)]
    start = (1, Fraction(-1, 3))
    thr = cone_exit_threshold(start, (1, 0), gens)
    report.record("threshold.value", Fraction(2, 3), thr)
    for trial in range(10):
        t_in = thr * Fraction(rng.randint(0, 7), 8)
        t_out = thr + Fraction(rng.randint(1, 5), 4)
        inside = cone_member([start[0] - t_in, start[1]], gens)
        outside = cone_member([start[0] - t_out, start[1]], gens)
        report.record(f"threshold.consistency.{trial}", (True, False), (inside, outside))

    q = QuadraticNumber.make(Fraction(3, 2), Fraction(-5, 7), 10)
    conj = q.conjugate()
    report.record(
        "quadratic.norm", Fraction(9, 4) - 10 * Fraction(25, 49), q * conj
    )
    report.record("quadratic.collapse", 7, QuadraticNumber.make(1, 2, 9))


def _suite_lattice(report, rng):
    for trial in range(20):
        n = rng.randint(0, 9)
        a, b, c = (_random_class(rng, n) for _ in range(3))
        lam = _random_rational(rng)
        lhs = intersect(a, lam * b + c)
        rhs = lam * intersect(a, b) + intersect(a, c)
        report.record(f"bilinear.{trial}", lhs == rhs and intersect(a, b) == intersect(b, a), True)
    for n in range(0, 10):
        basis = [e0(n)] + [exceptional(i, n) for i in range(1, n + 1)]
        gram = [[intersect(x, y) for y in basis] for x in basis]
        expected = [[(1 if i == j == 0 else -1 if i == j else 0) for j in range(n + 1)] for i in range(n + 1)]
        report.record(f"signature.{n}", expected, gram)
    for n in (1, 3, 6, 8):
        ok = all(
            self_intersection(c) == -1
            and intersect(c, canonical_class(n)) == -1
            and expected_genus(c) == 0
            for c in exceptional_classes(n)
        )
        report.record(f"exceptional.numerics.{n}", True, ok)


def _suite_weyl(report, rng):
    for trial in range(60):
        n = rng.randint(1, 9)
        refls = simple_reflections(n)
        if not refls:
            continue
        r = rng.choice(refls)
        a = _random_class(rng, n)
        b = _random_class(rng, n)
        ok = (
            intersect(apply(r, a), apply(r, b)) == intersect(a, b)
            and apply(r, canonical_class(n)) == canonical_class(n)
            and apply(r, apply(r, a)) == a
        )
        report.record(f"reflection.invariance.{trial}", True, ok)
    for n in range(3, 9):
        classes = set(exceptional_classes(n))
        ok = all(
            {apply(r, c) for c in classes} == classes for r in simple_reflections(n)
        )
        report.record(f"permutes.exceptional.{n}", True, ok)
        report.record(
            f"oracle.match.{n}",
            exceptional_classes(n),
            exceptional_classes_diophantine(n),
        )
    for n in range(3, 9):
        ok = all(
            satisfies_noether_inequality(c)
            for c in exceptional_classes(n)
            if sum(1 for v in c.m if v > 0) >= 2
        )
        report.record(f"noether.{n}", True, ok)
    orb = orbit(DivisorClass(5, 1, (1, 0, 0, 0, 0)))
    ok = all(self_intersection(c) == 0 and expected_genus(c) == 0 for c in orb.elements)
    report.record("selfint0.orbit", True, ok)
    for n in range(3, 9):
        reduced, _word = cremona_reduce(exceptional_classes(n)[-1])
        report.record(f"cremona.reaches.e{n}", exceptional(n, n), reduced)


def _suite_cones(report, rng):
    for n in range(1, 9):
        eps = seshadri(n)
        nef_at = is_nef(uniform_class(n, 1, eps))
        beyond = is_nef(uniform_class(n, 1, eps + Fraction(1, 1000)))
        report.record(f"seshadri.nef.threshold.{n}", (True, False), (nef_at, beyond))
        delta = mu_threshold(uniform_class(n, 1, Fraction(1, 3)), e0(n))
        report.record(f"delta.consistency.{n}", 1 - Fraction(n, 1) * eps / 3, delta)
    for trial in range(40):
        n = rng.randint(0, 8)
        D = _random_class(rng, n, num=4, den=3)
        amp, nef, psef = is_ample(D), is_nef(D), is_pseudoeffective(D)
        ok = (not amp or nef) and (not nef or psef)
        report.record(f"chain.ample.nef.psef.{trial}", True, ok)
        member = cone_member(D.coords(), cone_model(n).generator_coords)
        report.record(f"psef.lp.agreement.{trial}", member, psef)
    for trial in range(20):
        n = rng.randint(1, 8)
        D = _random_psef(rng, n)
        N = _random_psef(rng, n)
        if is_nef(N):
            report.record(
                f"psef.dual.fuzz.{trial}", True, intersect(D, N) >= 0
            )


def _suite_zariski(report, rng):
    for trial in range(40):
        n = rng.randint(0, 8)
        D = _random_psef(rng, n)
        z = zariski_decompose(D)
        recon = z.positive
        for c, x in z.negative:
            recon = recon + x * c
        ok = (
            recon == D
            and is_nef(z.positive)
            and all(x > 0 for _c, x in z.negative)
            and all(intersect(z.positive, c) == 0 for c, _x in z.negative)
            and (not z.negative or is_negative_definite([list(r) for r in z.gram]))
        )
        report.record(f"decomposition.invariants.{trial}", True, ok)
        shuffled = list(cone_model(n).negative_candidates)
        rng.shuffle(shuffled)
        z2 = zariski_decompose(D, candidate_order=shuffled)
        report.record(f"order.independence.{trial}", z.negative, z2.negative)
        z3 = zariski_decompose(z.positive)
        report.record(f"idempotence.{trial}", (z.positive, ()), (z3.positive, z3.negative))
    for n in (2, 3, 5, 6, 7, 8):
        P = uniform_class(n, 1, seshadri(n))
        if is_big(P) and not is_ample(P):
            report.record(f"null.nonempty.{n}", True, len(null_set(P)) > 0)
    for trial in range(15):
        n = rng.randint(0, 8)
        D = _random_big(rng, n)
        z = zariski_decompose(D)
        report.record(f"big.volume.positive.{trial}", True, z.volume() > 0)


def _suite_okounkov(report, rng):
    for trial in range(25):
        n = rng.randint(0, 8)
        D = _random_big(rng, n)
        body = okounkov_body(D)
        z = zariski_decompose(D)
        report.record(f"area.law.{trial}", self_intersection(z.positive), 2 * body.area())
    for n in range(1, 9):
        thr = cone_exit_threshold(
            e0(n).coords(),
            DivisorClass(n, 0, (-1,) * n).coords(),
            cone_model(n).generator_coords,
        )
        pairs = 0
        while pairs < 6:
            eps = thr * Fraction(rng.randint(1, 15), 16)
            eps2 = eps + (thr - eps) * Fraction(rng.randint(0, 15), 16)
            if eps == 0 or eps2 >= thr:
                continue
            lhs = okounkov_body(uniform_class(n, 1, eps2))
            rhs = rescale(okounkov_body(uniform_class(n, 1, eps)), eps2 / eps)
            report.record(f"rescale.law.{n}.{pairs}", lhs, rhs)
            pairs += 1
        report.record(
            f"seshadri.consistency.{n}",
            seshadri_body(n),
            okounkov_body(uniform_class(n, 1, seshadri(n))),
        )
    for n in range(1, 9):
        body = okounkov_body(uniform_class(n, 1, Fraction(1, 3)))
        report.record(f"beta.start.{n}", 1, max(y for _x, y in body.vertices))
        knee = [v for v in body.vertices if v[0] > 0 and v[1] > 0]
        eps = Fraction(seshadri(n))
        report.record(
            f"breakpoint.{n}", [(1 - 1 / (3 * eps), 1 / (3 * eps))], knee
        )
    entries = dissection(Fraction(1, 3))
    report.record("dissection.count", 10, len(entries))
    for (n_out, outer), (n_in, inner) in zip(entries, entries[1:]):
        report.record(f"nesting.{n_out}.{n_in}", True, outer.contains(inner))


def _suite_tables(report, rng):
    sizes = {n: len(exceptional_classes(n)) for n in range(1, 9)}
    report.record(
        "exceptional.counts",
        {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240},
        sizes,
    )
    report.record(
        "histogram.n8",
        {0: 8, 1: 28, 2: 56, 3: 56, 4: 56, 5: 28, 6: 8},
        degree_histogram(exceptional_classes(8)),
    )
    report.record(
        "seshadri.table",
        [
            Fraction(1),
            Fraction(1, 2),
            Fraction(1, 2),
            Fraction(1, 2),
            Fraction(2, 5),
            Fraction(2, 5),
            Fraction(3, 8),
            Fraction(6, 17),
            Fraction(1, 3),
        ],
        [Fraction(seshadri(n)) for n in range(1, 10)],
    )
    quad_table = {
        n: okounkov_body(uniform_class(n, 1, Fraction(1, 3))).vertices
        for n in range(1, 9)
    }
    eps_prime = {n: 1 - 1 / (3 * Fraction(seshadri(n))) for n in range(1, 9)}
    delta = {n: 1 - Fraction(n) * Fraction(seshadri(n)) / 3 for n in range(1, 9)}
    expected = {
        n: Polygon(
            [(0, 0), (delta[n], 0), (eps_prime[n], 1 - eps_prime[n]), (0, 1)]
        ).vertices
        for n in range(1, 9)
    }
    report.record("quadrilateral.table", expected, quad_table)
    report.record(
        "strip.9.3.1", body_L(9, 3, 1), nagata_strip(9, 3, 1)
    )
    report.record("strip.16.degenerate", True, nagata_strip(16, 4, 1).is_degenerate)
    report.record("strip.10.conjectural", True, nagata_strip(10, 4, 1).conjectural)


_SUITE_FNS = {
    "exactlin": _suite_exactlin,
    "lattice": _suite_lattice,
    "weyl": _suite_weyl,
    "cones": _suite_cones,
    "zariski": _suite_zariski,
    "okounkov": _suite_okounkov,
    "tables": _suite_tables,
}


def run_suite(name: str, seed: int = 42) -> list[VerificationReport]:
    """Run one named suite, or all of them; returns one report per suite."""
    if name == "all":
        names = SUITES
    elif name in _SUITE_FNS:
        names = (name,)
    else:
        raise ValueError(f"unknown suite {name!r} (choose from {', '.join(SUITES)} or all)")
    reports = []
    for suite_name in names:
        report = VerificationReport(suite=suite_name, seed=seed)
        rng = random.Random((seed, suite_name).__repr__())
        _SUITE_FNS[suite_name](report, rng)
        reports.append(report)
    return reports
