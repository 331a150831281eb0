"""The ten acceptance criteria, each at its stated tolerance and time budget.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per criterion.
"""

import os
import subprocess
import sys
import time
from fractions import Fraction
from itertools import permutations

import pytest

from kodaira_kit import blowup, cech_engine, divisors, hermitian_curvature as hc, kodaira_map as km
from kodaira_kit.symbolic import RationalFunc, substitute

from oracles import (
    count_monomials,
    finite_difference,
    random_expression,
    random_point,
    random_split_function,
    relative_error,
    seeded,
)


@pytest.fixture
def report(request):
    """Print one PASS/FAIL line for the criterion, whatever the outcome."""
    state = {"detail": ""}
    yield state
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    capman = request.config.pluginmanager.getplugin("capturemanager")
    with capman.global_and_fixture_disabled():
        print(f"\n[acceptance] {request.node.name}: {'PASS' if ok else 'FAIL'} {state['detail']}")


def test_criterion_01_cohomology_tables(report):
    t0 = time.perf_counter()
    for d in range(-6, 7):
        s = cech_engine.TwistingSheaf(1, d)
        h0, h1 = cech_engine.cohomology_dim(s, 0), cech_engine.cohomology_dim(s, 1)
        bound = abs(d) + 2
        assert h0 == count_monomials(1, d, lambda a: min(a) >= 0, bound) == max(d + 1, 0)
        assert h1 == count_monomials(1, d, lambda a: max(a) <= -1, bound) == max(-d - 1, 0)
    elapsed = time.perf_counter() - t0
    report["detail"] = f"({elapsed:.2f} s, budget 5 s)"
    assert elapsed < 5


def test_criterion_02_vanishing_instances(report):
    t0 = time.perf_counter()
    cases = 0
    for n in (1, 2):
        for d in range(1, 6):
            s = cech_engine.TwistingSheaf(n, d - n - 1)
            for q in range(1, n + 1):
                assert cech_engine.cohomology_dim(s, q) == 0, (n, d, q)
                cases += 1
    elapsed = time.perf_counter() - t0
    report["detail"] = f"({cases} groups, {elapsed:.2f} s, budget 30 s)"
    assert elapsed < 30


def test_criterion_03_delta_squared(report):
    rng = seeded(3)
    cases = 0
    while cases < 200:
        n = rng.randint(1, 3)
        d = rng.randint(-6, 6)
        p = rng.randint(0, n)
        bound = abs(d) + 1
        a = [rng.randint(-bound, bound) for _ in range(n)]
        last = d - sum(a)
        if abs(last) > bound:
            continue
        assert cech_engine.verify_delta_squared(cech_engine.TwistingSheaf(n, d), p, a + [last])
        cases += 1
    report["detail"] = f"({cases} instances)"


def test_criterion_04_canonical_lemma(report):
    t0 = time.perf_counter()
    for n in (2, 3, 4):
        atlas = blowup.BlowupAtlas(n)
        rep = blowup.verify_canonical_lemma(atlas)
        assert rep.passed and rep.multiplicity == n - 1
        base = atlas.base_variables
        for j, k in permutations(atlas.charts, 2):
            zj = RationalFunc.var(base, base[j - 1])
            zk = RationalFunc.var(base, base[k - 1])
            target = (zj / zk) ** (n - 1)
            in_chart = substitute(target, dict(zip(base, atlas.to_base(j))), atlas.chart_variables(j))
            assert blowup.jacobian_det(atlas, j, k) == in_chart
    elapsed = time.perf_counter() - t0
    report["detail"] = f"(n = 2, 3, 4; {elapsed:.2f} s, budget 10 s)"
    assert elapsed < 10


def test_criterion_05_curvature_additivity(report):
    rng = seeded(5)
    names = hc.herm_variables(1)
    zw = hc.herm_var(1, "z1") * hc.herm_var(1, "w1")

    def metric():
        h = RationalFunc.constant(names, rng.randint(1, 4))
        for _ in range(rng.randint(1, 3)):
            h = h * (1 + zw * rng.randint(1, 3)) ** rng.choice([-3, -2, -1, 1, 2, 3])
        return h

    for _ in range(50):
        h1, h2 = metric(), metric()
        assert (hc.curvature(h1 * h2) - hc.curvature(h1) - hc.curvature(h2)).is_zero()
    report["detail"] = "(50 pairs)"


def test_criterion_06_fubini_study_positivity(report):
    checked = 0
    for n in (1, 2):
        pts = hc.default_points(n, 20)
        assert len(set(pts)) >= 20
        for chart in range(n + 1):
            rep = hc.positivity_sample(hc.fubini_study(n, chart), pts)
            assert rep.all_positive
            assert all(isinstance(m, Fraction) for v in rep.verdicts for m in v.minors)
            checked += len(rep.verdicts)
    report["detail"] = f"({checked} point checks)"


def test_criterion_07_divisor_correspondences(report):
    rng = seeded(7)
    for _ in range(100):
        f, g = random_split_function(rng), random_split_function(rng)
        D = divisors.principal_divisor(f)
        assert D.degree == 0
        probes = {p for p, _ in D.support} | {divisors.INFINITY, divisors.PointP1(Fraction(rng.randint(-9, 9), 2))}
        for p in probes:
            assert divisors.ord_at(f * g, p) == divisors.ord_at(f, p) + divisors.ord_at(g, p)
    for _ in range(30):
        pairs = [(Fraction(rng.randint(-6, 6), rng.randint(1, 3)), rng.randint(0, 3)) for _ in range(rng.randint(0, 3))]
        if rng.random() < 0.5:
            pairs.append(("inf", rng.randint(0, 3)))
        E = divisors.DivisorP1.of(*pairs)
        assert divisors.is_effective(E)
        dim = divisors.section_space(E).dim
        assert dim == E.degree + 1 == cech_engine.cohomology_dim(cech_engine.TwistingSheaf(1, E.degree), 0)
    report["detail"] = "(100 functions, 30 effective divisors)"


def test_criterion_08_embedding_desk_scale(report):
    t0 = time.perf_counter()
    samples = km.DEFAULT_SAMPLES
    assert len(samples) == 12
    pairs = km.all_pairs(samples)
    for d in (1, 2, 3, 4):
        b = km.monomial_basis(1, d)
        bp = km.base_points(b)
        assert bp.complete and not bp.points
        assert km.check_injective(b, pairs).passed
        assert km.check_immersion(b, samples).passed
        assert all(km.two_point_surjectivity(d, p, q) for p, q in pairs)
    b0 = km.monomial_basis(1, 0)
    assert not km.check_injective(b0, pairs).passed
    assert not km.check_immersion(b0, samples).passed
    assert not any(km.two_point_surjectivity(0, p, q) for p, q in pairs)
    elapsed = time.perf_counter() - t0
    report["detail"] = f"({elapsed:.2f} s, budget 5 s)"
    assert elapsed < 5


def test_criterion_09_wirtinger_finite_differences(report):
    rng = seeded(9)
    worst = 0.0
    for k in range(50):
        n = 1 + k % 2
        e = random_expression(rng, n)
        names = hc.herm_variables(n)
        derivs = [hc.wirtinger(e, int(v[1:]), anti=v[0] == "w") for v in names]
        for _ in range(5):
            pt = random_point(rng, n)
            for idx, de in enumerate(derivs):
                exact = complex(de.evaluate(pt))
                fd = finite_difference(e, pt, idx)
                if abs(exact) < 1e-9:
                    assert abs(fd) < 1e-6
                    continue
                err = relative_error(fd, exact)
                worst = max(worst, err)
                assert err <= 1e-6
    report["detail"] = f"(worst relative error {worst:.1e})"


def test_criterion_10_selftest_determinism(report):
    outs = []
    for threads in ("1", "8"):
        env = dict(os.environ, KODAIRA_KIT_THREADS=threads)
        proc = subprocess.run(
            [sys.executable, "-m", "kodaira_kit.cli", "selftest"],
            capture_output=True, env=env, check=False,
        )
        assert proc.returncode == 0, proc.stderr.decode()
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
    report["detail"] = f"({len(outs[0])} bytes, identical)"
