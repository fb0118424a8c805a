from fractions import Fraction

import pytest

import golden_forms
from circulant_resistance.circulant import build_circulant
from circulant_resistance.closed_form import c12_kirchhoff
from circulant_resistance.errors import Disconnected, StepCapExceeded, UnsupportedN
from circulant_resistance.spectral import eigentime_mfpt
from circulant_resistance.walk import (
    BLOCK,
    commute,
    fpt_closed,
    fpt_general,
    mfpt,
    mfpt_closed,
    simulate_fpt,
    walk_stats,
)


class TestClosed:
    def test_complete_graph(self):
        assert all(fpt_closed(5, l) == 4 for l in range(1, 5))

    def test_octahedron(self):
        assert fpt_closed(6, 1) == 12 * Fraction(5, 12) == 5
        assert fpt_closed(6, 3) == 12 * Fraction(1, 2) == 6

    @pytest.mark.parametrize("N", range(5, 60))
    def test_symmetry_and_parity_form(self, N):
        for l in range(1, N):
            assert fpt_closed(N, l) == fpt_closed(N, N - l)
            q = fpt_closed(N, l)
            assert abs(float(q) - float(golden_forms.fpt(N, l))) <= 1e-12 * float(q)

    @pytest.mark.parametrize("N", range(7, 201))
    def test_hitting_relation(self, N):
        assert 3 * fpt_closed(N, 1) - fpt_closed(N, 2) - fpt_closed(N, 3) == 4

    def test_out_of_domain(self):
        with pytest.raises(UnsupportedN):
            fpt_closed(4, 1)
        with pytest.raises(ValueError):
            fpt_closed(7, 0)


class TestMfpt:
    def test_values(self):
        assert mfpt_closed(6) == Fraction(13, 3)
        assert mfpt_closed(5) == Fraction(16, 5) == sum(fpt_closed(5, l) for l in range(1, 5)) / 5

    @pytest.mark.parametrize("N", range(5, 101))
    def test_three_routes(self, N):
        m = mfpt_closed(N)
        assert m == Fraction(4, N) * c12_kirchhoff(N)
        assert m == sum(fpt_closed(N, l) for l in range(1, N)) / N
        assert float(m) == pytest.approx(eigentime_mfpt(build_circulant(N, (1, 2))), rel=1e-9)
        assert float(m) == pytest.approx(float(golden_forms.mfpt(N)), rel=1e-12)

    def test_dispatch(self):
        assert mfpt(6) == Fraction(13, 3)
        assert mfpt(build_circulant(6, (1, 2))) == pytest.approx(13 / 3)


class TestGeneral:
    def test_cycle(self):
        for N in (5, 8, 13):
            assert fpt_general(build_circulant(N, [1]), 1) == pytest.approx(N - 1)

    def test_k5(self):
        assert fpt_general(build_circulant(5, [1, 2]), 2) == pytest.approx(4.0)

    def test_octahedron(self):
        assert fpt_general(build_circulant(6, [1, 2]), 2) == pytest.approx(5.0)

    @pytest.mark.parametrize("N", range(5, 80, 3))
    def test_matches_closed(self, N):
        spec = build_circulant(N, (1, 2))
        for l in range(1, N):
            assert fpt_general(spec, l) == pytest.approx(float(fpt_closed(N, l)), rel=1e-9)

    def test_antipodal_edge_count_used(self):
        # C_8(1,4): 8 ring edges + 4 diameters
        spec = build_circulant(8, [1, 4])
        assert spec.edge_count == 12
        from circulant_resistance.oracle import resistance_solve
        from circulant_resistance.circulant import dense_laplacian
        r = resistance_solve(dense_laplacian(spec), 0, 3)
        assert fpt_general(spec, 3) == pytest.approx(12 * r, rel=1e-9)

    def test_commute(self):
        assert commute(build_circulant(5, [1, 2]), 3) == pytest.approx(8.0)
        assert commute(build_circulant(6, [1, 2]), 3) == pytest.approx(12.0)
        N = 11
        for l in range(1, N):
            assert commute(build_circulant(N, [1]), l) == pytest.approx(2 * l * (N - l))

    def test_walk_stats(self):
        st = walk_stats(build_circulant(6, (1, 2)))
        assert st.fpt[1] == 5 and st.commute[3] == 12 and st.mfpt == Fraction(13, 3)
        assert st.mfpt == sum(st.fpt.values()) / 6
        fl = walk_stats(build_circulant(9, (1, 3)))
        assert fl.mfpt == pytest.approx(sum(fl.fpt.values()) / 9)

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            fpt_general(build_circulant(6, [2]), 2)


class TestSimulation:
    def test_single_trial_reproducible(self):
        spec = build_circulant(9, (1, 2))
        a = simulate_fpt(spec, 4, 1, seed=123)
        b = simulate_fpt(spec, 4, 1, seed=123)
        assert a == b and a.std_error == 0.0
        assert a.mean == int(a.mean) >= 1

    def test_trial_walks_independent_of_total(self):
        # the first walk is the same whether 1 or 3000 walks are run
        spec = build_circulant(10, (1, 2))
        one = simulate_fpt(spec, 5, 1, seed=9).mean
        import circulant_resistance.walk as w
        s, _ = w._walk_block(__import__("numpy").array(spec.neighbour_offsets), 10, 5, 9, 0, 1, w.STEP_CAP)
        assert one == s

    def test_worker_count_irrelevant(self):
        spec = build_circulant(7, (1, 2))
        trials = 3 * BLOCK + 17
        a = simulate_fpt(spec, 3, trials, seed=5, workers=1)
        b = simulate_fpt(spec, 3, trials, seed=5, workers=4)
        assert a == b

    def test_seed_matters(self):
        spec = build_circulant(7, (1, 2))
        assert simulate_fpt(spec, 3, 500, seed=1) != simulate_fpt(spec, 3, 500, seed=2)

    @pytest.mark.parametrize("N, l", [(6, 1), (5, 3)])
    def test_large_run_near_truth(self, N, l):
        est = simulate_fpt(build_circulant(N, (1, 2)), l, 10**6, seed=2024)
        assert abs(est.mean - float(fpt_closed(N, l))) <= 4 * est.std_error

    def test_cycle_against_formula(self):
        est = simulate_fpt(build_circulant(9, [1]), 4, 50_000, seed=77)
        assert abs(est.mean - 4 * 5) <= 4 * est.std_error

    def test_step_cap(self):
        with pytest.raises(StepCapExceeded):
            simulate_fpt(build_circulant(40, [1]), 20, 50, seed=1, step_cap=10)

    def test_bad_inputs(self):
        spec = build_circulant(6, (1, 2))
        with pytest.raises(ValueError):
            simulate_fpt(spec, 1, 0, seed=1)
        with pytest.raises(ValueError):
            simulate_fpt(spec, 0, 10, seed=1)
        with pytest.raises(Disconnected):
            simulate_fpt(build_circulant(6, [2]), 2, 10, seed=1)

    def test_std_error_definition(self):
        est = simulate_fpt(build_circulant(6, (1, 2)), 3, 4000, seed=3)
        assert est.trials == 4000 and est.seed == 3
        assert 0 < est.std_error < est.mean
