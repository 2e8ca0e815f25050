import random

import pytest
from hypothesis import given, strategies as st

from oddrep.errors import UnsupportedFiber
from oddrep.surface import (CASES, II, III, III_STAR, KodairaFiber, RealComponents,
                            SurfaceConfig, builtin_case, case_6O_config, chi_real,
                            fiber_chi, fiber_conductor_exponent, fiber_trace, I, I_star,
                            normalize_case, rank_N, surface_report, trace_c_mod_ell,
                            trace_V, trace_W)

ALL, BUT2 = RealComponents.ALL, RealComponents.ALL_BUT_TWO


@pytest.mark.parametrize("fiber,chi,tr", [
    (I(1, True), -1, 0),
    (I(1, False), 1, 0),
    (I(2, True), -2, -1),
    (I(2, False), 0, -1),
    (II, 0, 0),
    (III, -1, -1),
    (III_STAR, -7, -7),
    (I_star(0, ALL), -4, -4),
    (I_star(0, BUT2), -2, -2),
    (I_star(4, ALL), -8, -8),
    (I_star(4, BUT2), -6, -6),
])
def test_fiber_tables(fiber, chi, tr):
    assert fiber_chi(fiber) == chi
    assert fiber_trace(fiber) == tr


@pytest.mark.parametrize("fiber", [I(3, True), I(5, False), KodairaFiber("IV"),
                                   KodairaFiber("IV_star"), KodairaFiber("II_star")])
def test_untabulated_fibers_raise(fiber):
    with pytest.raises(UnsupportedFiber):
        fiber_chi(fiber)
    with pytest.raises(UnsupportedFiber):
        fiber_trace(fiber)
    with pytest.raises(UnsupportedFiber):
        surface_report(SurfaceConfig((fiber,)))


def test_untabulated_fibers_allowed_as_pairs():
    cfg = SurfaceConfig((), (KodairaFiber("IV"), I(7, True)))
    assert chi_real(cfg) == 0 and trace_V(cfg) == 0
    assert rank_N(cfg) == -4 + 2 * 2 + 2 * 1


@pytest.mark.parametrize("fiber,e", [(I(2, True), 1), (I(9, False), 1), (I_star(4), 2),
                                     (III, 2), (II, 2), (III_STAR, 2)])
def test_conductor_exponent(fiber, e):
    assert fiber_conductor_exponent(fiber) == e


def test_fiber_parameter_validation():
    with pytest.raises(ValueError):
        KodairaFiber("I_n", n=2)
    with pytest.raises(ValueError):
        KodairaFiber("I_n", n=0, split=True)
    with pytest.raises(ValueError):
        KodairaFiber("II", n=1)
    with pytest.raises(ValueError):
        KodairaFiber("I_n_star", n=1, split=False)
    with pytest.raises(ValueError):
        KodairaFiber("V")
    assert KodairaFiber("I_n_star", n=3).real_components is ALL


def test_empty_config():
    cfg = SurfaceConfig()
    assert (chi_real(cfg), trace_W(cfg), trace_V(cfg), rank_N(cfg)) == (0, -2, 0, -4)
    assert any("< 1" in w for w in surface_report(cfg).warnings)


@pytest.mark.parametrize("a1,a2", [(0, 0), (1, 0), (0, 3), (2, 5)])
def test_case_1_and_2_sums(a1, a2):
    c1 = builtin_case("1", a1, a2)
    assert chi_real(c1) == 1 + 0 - 1 - 4 * a1 - 2 * a2
    assert trace_W(c1) == -4 - 4 * a1 - 2 * a2
    c2 = builtin_case("2", a1, a2)
    assert chi_real(c2) == 1 - 1 + 0 - 4 * a1 - 2 * a2


def test_builtin_case_contents():
    assert builtin_case("1").real_fibers == (I(1, False), I(2, False), III)
    c = builtin_case("3_Omega", 2, 1)
    assert c.real_fibers.count(I(2, True)) == 2
    assert sum(f.symbol == "I_n_star" and f.n == 4 for f in c.real_fibers) == 2
    assert III_STAR in builtin_case("4").real_fibers
    assert len(builtin_case("2", n_pairs_extra=3).conjugate_pairs) == 3


@pytest.mark.parametrize("case,trv,trc", [("1", 2, -2), ("2", 0, 0), ("3_O", 0, 0),
                                          ("3_Omega", -2, 2), ("4", 0, 0)])
def test_case_traces(case, trv, trc):
    for a1 in range(4):
        for a2 in range(4):
            for rc in (ALL, BUT2):
                cfg = builtin_case(case, a1, a2, a1 + a2, rc)
                assert trace_V(cfg) == trv
                assert trace_c_mod_ell(cfg) == trc


@pytest.mark.parametrize("case", ["3_O", "3_Omega"])
def test_i4_star_structure_is_irrelevant(case):
    a = surface_report(builtin_case(case, 1, 2, 0, ALL))
    b = surface_report(builtin_case(case, 1, 2, 0, BUT2))
    assert (a.tr_V, a.tr_c_mod_ell, a.rank_N) == (b.tr_V, b.tr_c_mod_ell, b.rank_N)


def test_case_names():
    assert normalize_case("Case3Omega") == "3_Omega"
    assert normalize_case("3_Ω") == "3_Omega"
    assert normalize_case("case 1") == "1"
    assert normalize_case("3O") == "3_O"
    with pytest.raises(ValueError):
        normalize_case("5")
    assert len(CASES) == 5


@pytest.mark.parametrize("n", range(6))
def test_rank_of_6O_family(n):
    for pairs in range(2 * n + 2):
        assert rank_N(case_6O_config(n, pairs)) == 8 * n + 6


def test_rank_examples():
    assert rank_N(SurfaceConfig((I(1, True), II, II))) == 1
    with pytest.raises(ValueError):
        case_6O_config(0, 2)


def test_report_identities_and_warnings():
    r = surface_report(builtin_case("1", 1, 1), defaulted_components=2)
    assert r.tr_V == r.chi_real - 2 - r.tr_W
    assert r.tr_c_mod_ell == -r.tr_V
    assert any("defaulted" in w for w in r.warnings)


_real = st.sampled_from([I(1, True), I(1, False), I(2, True), I(2, False), II, III, III_STAR,
                         I_star(0), I_star(3, BUT2)])
_any = st.one_of(_real, st.sampled_from([KodairaFiber("IV"), KodairaFiber("II_star"), I(6, True)]))


@given(st.lists(_real, max_size=12), st.lists(_any, max_size=6),
       st.integers(0, 10), st.sampled_from([ALL, BUT2]))
def test_adding_star_fiber_keeps_trace_V(real, pairs, n, rc):
    cfg = SurfaceConfig(tuple(real), tuple(pairs))
    bigger = cfg.with_real(I_star(n, rc))
    assert trace_V(bigger) == trace_V(cfg)
    assert rank_N(bigger) == rank_N(cfg) + 2


@given(st.lists(_real, max_size=12), st.lists(_any, max_size=6), _any)
def test_adding_conjugate_pair(real, pairs, extra):
    cfg = SurfaceConfig(tuple(real), tuple(pairs))
    bigger = cfg.with_pairs(extra)
    assert chi_real(bigger) == chi_real(cfg)
    assert trace_W(bigger) == trace_W(cfg)
    assert trace_V(bigger) == trace_V(cfg)
    assert rank_N(bigger) == rank_N(cfg) + 2 * fiber_conductor_exponent(extra)


def test_random_reports_are_consistent():
    rnd = random.Random(7)
    pool = [I(1, True), I(1, False), I(2, True), I(2, False), II, III, III_STAR, I_star(2)]
    for _ in range(200):
        cfg = SurfaceConfig(tuple(rnd.choices(pool, k=rnd.randint(0, 9))))
        r = surface_report(cfg)
        assert r.tr_V == r.chi_real - 2 - r.tr_W and r.tr_c_mod_ell == -r.tr_V
