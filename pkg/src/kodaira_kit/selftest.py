"""Deterministic invariant suite behind ``kodaira-kit selftest``.

Each check draws its random instances from a fixed seed and returns a small
exact summary, so the report is byte-identical across runs and worker
counts (no timings, no backend names).
"""

import random
from fractions import Fraction
from itertools import permutations

from . import blowup, cech_engine, divisors, hermitian_curvature as hc, kodaira_map as km
from . import line_bundles as lb
from .symbolic import RationalFunc

SEED = 20240917


def _check_cohomology_tables(rng, threads):
    bad = []
    for n, span in ((1, 6), (2, 4), (3, 3)):
        s_range = range(-span, span + 1)
        for d in s_range:
            s = cech_engine.TwistingSheaf(n, d)
            exp = cech_engine.expected_dims(n, d)
            for q in range(n + 1):
                got = cech_engine.cohomology_dim(s, q, threads=threads)
                if got != exp[q]:
                    bad.append([n, d, q, got, exp[q]])
    return not bad, {"mismatches": bad}


def _check_vanishing(rng, threads):
    cases = 0
    bad = []
    for n in (1, 2):
        for d in range(1, 6):
            s = cech_engine.TwistingSheaf(n, d - n - 1)
            for q in range(1, n + 1):
                cases += 1
                got = cech_engine.cohomology_dim(s, q, threads=threads)
                if got:
                    bad.append([n, d, q, got])
    return not bad, {"cases": cases, "nonzero": bad}


def _random_multidegree(rng, n, d, bound):
    while True:
        a = [rng.randint(-bound, bound) for _ in range(n)]
        last = d - sum(a)
        if abs(last) <= bound:
            return a + [last]


def _check_delta_squared(rng, threads):
    cases = 60
    bad = []
    for _ in range(cases):
        n = rng.randint(1, 3)
        d = rng.randint(-6, 6)
        p = rng.randint(0, max(0, n - 2))
        a = _random_multidegree(rng, n, d, abs(d) + 1)
        if not cech_engine.verify_delta_squared(cech_engine.TwistingSheaf(n, d), p, a):
            bad.append([n, d, p, a])
    return not bad, {"cases": cases, "failures": bad}


def _check_picard(rng, threads):
    cases = 30
    bad = 0
    for _ in range(cases):
        n = rng.randint(1, 3)
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        A, B = lb.standard_bundle(n, a), lb.standard_bundle(n, b)
        if lb.equivalence_degree(lb.tensor(A, B)) != a + b or lb.equivalence_degree(lb.dual(A)) != -a:
            bad += 1
    return bad == 0, {"cases": cases, "failures": bad}


def _random_split_function(rng, variables=("z",)):
    z = RationalFunc.var(variables, variables[0])
    f = RationalFunc.constant(variables, Fraction(rng.choice([1, -2, 3, 5]), rng.choice([1, 2, 7])))
    for _ in range(rng.randint(1, 4)):
        root = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        f = f * (z - root) ** rng.choice([-2, -1, 1, 2])
    return f


def _check_divisors(rng, threads):
    cases = 25
    bad = []
    for k in range(cases):
        f = _random_split_function(rng)
        g = _random_split_function(rng)
        D = divisors.principal_divisor(f)
        if D.degree != 0:
            bad.append(["degree", str(f)])
        p = divisors.PointP1(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        if divisors.ord_at(f * g, p) != divisors.ord_at(f, p) + divisors.ord_at(g, p):
            bad.append(["additivity", str(f), str(g), str(p)])
        pts = [(Fraction(rng.randint(-3, 3)), rng.randint(0, 2)) for _ in range(3)]
        E = divisors.DivisorP1.of(*pts, ("inf", rng.randint(0, 2)))
        dim = divisors.section_space(E).dim
        h0 = cech_engine.cohomology_dim(cech_engine.TwistingSheaf(1, E.degree), 0, threads=threads)
        if not dim == E.degree + 1 == h0:
            bad.append(["sections", str(E), dim, h0])
    return not bad, {"cases": cases, "failures": bad}


def _check_blowup(rng, threads):
    summary = []
    ok = True
    for n in (2, 3, 4):
        atlas = blowup.BlowupAtlas(n)
        report = blowup.verify_canonical_lemma(atlas)
        signs = sorted({blowup.compare_jacobian(atlas, j, k).sign for j, k in permutations(atlas.charts, 2)})
        wrong = blowup.verify_canonical_lemma(atlas, multiplicity=n - 2).passed
        rel = blowup.defining_relations_hold(atlas)
        ok = ok and report.passed and signs == [1] and not wrong and rel
        summary.append({"n": n, "lemma": report.passed, "jacobian_signs": signs,
                        "wrong_multiplicity_rejected": not wrong, "relations": rel})
    for n in (2, 3):
        atlas = blowup.BlowupAtlas(n)
        for j, k, m in permutations(atlas.charts, 3):
            lhs = blowup.compose(blowup.chart_transition(atlas, j, k), blowup.chart_transition(atlas, k, m))
            rhs = blowup.chart_transition(atlas, j, m)
            if any(a != b for a, b in zip(lhs.components, rhs.components)):
                ok = False
    E = blowup.exceptional_cocycle(blowup.BlowupAtlas(3))
    deg = lb.equivalence_degree(E)
    ok = ok and deg == -1
    return ok, {"atlases": summary, "exceptional_degree_on_E": deg}


def _metric(rng, n=1):
    names = hc.herm_variables(n)
    h = RationalFunc.constant(names, 1)
    for _ in range(rng.randint(1, 2)):
        base = RationalFunc.constant(names, 1)
        for i in range(1, n + 1):
            base = base + hc.herm_var(n, f"z{i}") * hc.herm_var(n, f"w{i}") * rng.randint(1, 3)
        h = h * base ** rng.choice([-2, -1, 1, 2])
    return h


def _check_curvature(rng, threads):
    cases = 12
    bad = 0
    for k in range(cases):
        n = 1 if k % 3 else 2
        h1, h2 = _metric(rng, n), _metric(rng, n)
        diff = hc.curvature(h1 * h2) - hc.curvature(h1) - hc.curvature(h2)
        if not diff.is_zero() or not hc.curvature(h1).is_hermitian():
            bad += 1
    return bad == 0, {"cases": cases, "failures": bad}


def _check_fubini_study(rng, threads):
    rows = []
    ok = True
    for n in (1, 2):
        pts = hc.default_points(n, 20)
        for chart in range(n + 1):
            rep = hc.positivity_sample(hc.fubini_study(n, chart), pts, threads=threads)
            ok = ok and rep.all_positive
            rows.append({"n": n, "chart": chart, "points": len(pts), "positive": rep.all_positive,
                         "min_minor": str(rep.min_minor)})
    V = hc.herm_variables(1)
    z, w = hc.herm_var(1, "z1"), hc.herm_var(1, "w1")
    neg = hc.positivity_sample(hc.curvature(1 + z * w), hc.default_points(1), threads=threads)
    pos = hc.positivity_sample(hc.curvature(RationalFunc.constant(V, 1) / (1 + z * w)), hc.default_points(1),
                               threads=threads)
    ok = ok and neg.all_negative and pos.all_positive
    return ok, {"fubini_study": rows, "O(-1)_negative": neg.all_negative, "O(1)_positive": pos.all_positive,
                "orientation": hc.ORIENTATION, "scale": hc.SCALE}


def _check_embedding(rng, threads):
    rows = []
    ok = True
    for d in range(5):
        chk = km.embedding_check(d, km.DEFAULT_SAMPLES, threads=threads)
        expect = d >= 1
        ok = ok and (chk.passed == expect)
        if d == 0:
            ok = ok and not (chk.injective or chk.immersion or chk.two_point)
        rows.append({"d": d, "base_point_free": chk.base_point_free, "injective": chk.injective,
                     "immersion": chk.immersion, "two_point": chk.two_point})
    search = km.smallest_embedding_degree(4, threads=threads)
    return ok and search.degree == 1, {"degrees": rows, "smallest_degree": search.degree,
                                        "samples": len(km.DEFAULT_SAMPLES)}


CHECKS = (
    ("cohomology_tables", _check_cohomology_tables),
    ("vanishing_instances", _check_vanishing),
    ("delta_squared", _check_delta_squared),
    ("picard_homomorphism", _check_picard),
    ("divisor_correspondences", _check_divisors),
    ("blowup_canonical_lemma", _check_blowup),
    ("curvature_additivity", _check_curvature),
    ("fubini_study_positivity", _check_fubini_study),
    ("embedding_desk_scale", _check_embedding),
)


def run_selftest(threads=None, seed=SEED):
    """Run every check with its own seeded generator; returns a JSON-ready report."""
    results = []
    for k, (name, fn) in enumerate(CHECKS):
        rng = random.Random(seed + k)
        passed, detail = fn(rng, threads)
        results.append({"name": name, "passed": bool(passed), "detail": detail})
    return {
        "kind": "selftest",
        "seed": seed,
        "checks": results,
        "verdict": all(r["passed"] for r in results),
    }
