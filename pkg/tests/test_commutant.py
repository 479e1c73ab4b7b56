"""Commutant membership, the commutator oracle, indicator family, and the
norm-one projection."""

import random

import pytest

from dyncross.algebra import coefficient, delta, embed, identity, zero
from dyncross.commutant import (
    commutant_basis,
    commutes_oracle,
    indicator_family,
    is_in_commutant,
    project_to_commutant,
    random_commutant_element,
)
from dyncross.characters import CircleGrid, TorusCharacter, character_grid, eval_character
from dyncross.dynamics import minimal_interior_order
from dyncross.errors import ProjectionUnavailable
from dyncross.sampling import random_ctsfun, random_element
from dyncross.space import ATail, CtsFun, FinitePoint, IntPoint, ORIGIN


def fun2(space, va, vb):
    return CtsFun(space, {FinitePoint(0): va, FinitePoint(1): vb})


class TestMembership:
    def test_zero_index_always_in(self, system):
        rng = random.Random(1)
        f = random_ctsfun(system.space, rng)
        assert is_in_commutant(system, embed(f))
        assert commutes_oracle(system, embed(f))

    def test_two_point_swap_cases(self, swap2):
        f = fun2(swap2.space, 1, 2)
        assert not is_in_commutant(swap2, embed(f, 1))
        assert is_in_commutant(swap2, embed(f, 2))
        assert commutes_oracle(swap2, embed(f, 2))
        assert not commutes_oracle(swap2, delta(swap2.space, 1))

    def test_int_shift_window_support_breaks_membership(self, int_shift8):
        sp = int_shift8.space
        f = CtsFun(sp, {IntPoint(0): 1.0}, {"inf": 0.0})
        assert not is_in_commutant(int_shift8, embed(f, 1))
        assert not commutes_oracle(int_shift8, embed(f, 1))

    def test_oracle_agreement_randomized(self, system):
        rng = random.Random(2)
        for i in range(60):
            if i % 2 == 0:
                x = random_element(system.space, rng, 2, multiply_slack=1)
            else:
                x = random_commutant_element(system, rng, 2)
            assert is_in_commutant(system, x) == commutes_oracle(system, x)


class TestIndicatorFamily:
    def test_two_point_swap_parity(self, swap2):
        fam = indicator_family(swap2)
        assert fam.get(1).sup_norm() == 0
        assert fam.get(-3).sup_norm() == 0
        one = CtsFun.constant(swap2.space, 1.0)
        assert fam.get(2).add(one.scale(-1)).sup_norm() == 0
        assert fam.get(0).add(one.scale(-1)).sup_norm() == 0

    def test_int_shift_degenerate(self, int_shift8):
        fam = indicator_family(int_shift8)
        assert fam.get(5).sup_norm() == 0
        assert fam.get(0).sup_norm() == 1

    def test_pair_swap_unavailable_with_witness(self, tails8):
        with pytest.raises(ProjectionUnavailable) as err:
            indicator_family(tails8)
        assert err.value.k == 1
        assert err.value.point == ORIGIN

    def test_three_cycle(self, cycle3):
        fam = indicator_family(cycle3)
        assert fam.get(1).sup_norm() == 0
        assert fam.get(2).sup_norm() == 0
        assert fam.get(3).sup_norm() == 1
        assert fam.get(-6).sup_norm() == 1


class TestProjection:
    def test_two_point_swap_drops_odd_terms(self, swap2):
        sp = swap2.space
        x = (embed(fun2(sp, 1, 1)) + embed(fun2(sp, 2, 3), 1)
             + embed(fun2(sp, 4, 6), 2))
        px = project_to_commutant(swap2, x)
        assert px.support() == [0, 2]
        assert coefficient(px, 2).add(fun2(sp, 4, 6).scale(-1)).sup_norm() == 0

    def test_int_shift_keeps_only_zero_index(self, int_shift8):
        rng = random.Random(3)
        x = random_element(int_shift8.space, rng, 2, multiply_slack=1)
        px = project_to_commutant(int_shift8, x)
        assert px.support() in ([], [0])
        assert coefficient(px, 0).add(
            coefficient(x, 0).scale(-1)).sup_norm() == 0

    def test_pair_swap_raises(self, tails8):
        with pytest.raises(ProjectionUnavailable):
            project_to_commutant(tails8, identity(tails8.space))

    def test_commutant_fixed(self, system):
        if system.space.kind == "pair_swap_tails":
            pytest.skip("no projection on this fixture")
        rng = random.Random(4)
        for _ in range(10):
            x = random_commutant_element(system, rng, 2)
            assert (project_to_commutant(system, x) - x).ell1_norm() <= 1e-12

    def test_properties(self, system):
        if system.space.kind == "pair_swap_tails":
            pytest.skip("no projection on this fixture")
        rng = random.Random(5)
        for _ in range(20):
            x = random_element(system.space, rng, 2, multiply_slack=2)
            px = project_to_commutant(system, x)
            assert is_in_commutant(system, px)
            assert (project_to_commutant(system, px) - px).ell1_norm() <= 1e-12
            assert px.ell1_norm() <= x.ell1_norm() + 1e-12
            assert (project_to_commutant(system, x.adjoint())
                    - px.adjoint()).ell1_norm() <= 1e-12
            # compatible with the expectation reading the zero coefficient
            assert coefficient(px, 0).add(
                coefficient(x, 0).scale(-1)).sup_norm() == 0

    def test_bimodule(self, system):
        if system.space.kind == "pair_swap_tails":
            pytest.skip("no projection on this fixture")
        rng = random.Random(6)
        for _ in range(15):
            x = random_element(system.space, rng, 2, multiply_slack=2)
            g = random_commutant_element(system, rng, 2)
            px = project_to_commutant(system, x)
            assert (project_to_commutant(system, g * x) - g * px).ell1_norm() \
                <= 1e-9
            assert (project_to_commutant(system, x * g) - px * g).ell1_norm() \
                <= 1e-9

    def test_faithful(self, system):
        if system.space.kind == "pair_swap_tails":
            pytest.skip("no projection on this fixture")
        rng = random.Random(7)
        for _ in range(20):
            x = random_element(system.space, rng, 2, multiply_slack=2)
            sq = project_to_commutant(system, x.adjoint() * x)
            peak = max(f.sup_norm() for f in x.coeffs.values())
            assert coefficient(sq, 0).sup_norm() >= peak ** 2 - 1e-9
        assert project_to_commutant(
            system, zero(system.space)).ell1_norm() == 0

    def test_positive_through_characters(self, system):
        if system.space.kind == "pair_swap_tails":
            pytest.skip("no projection on this fixture")
        rng = random.Random(8)
        chars = character_grid(system, CircleGrid(8))
        for _ in range(10):
            x = random_element(system.space, rng, 2, multiply_slack=2)
            psq = project_to_commutant(system, x.adjoint() * x)
            for ch in chars:
                v = eval_character(system, ch, psq, check=False)
                assert v.real >= -1e-9
                assert abs(v.imag) <= 1e-9

    def test_projected_square_closed_forms(self, system):
        if system.space.kind == "pair_swap_tails":
            pytest.skip("no projection on this fixture")
        rng = random.Random(9)
        sp = system.space
        fam = indicator_family(system)
        for _ in range(10):
            x = random_element(sp, rng, 2, multiply_slack=2)
            psq = project_to_commutant(system, x.adjoint() * x)
            # coefficient-level form
            for m in psq.support():
                acc = CtsFun.zero(sp)
                for k, f in x.coeffs.items():
                    if k + m in x.coeffs:
                        acc = acc.add(
                            f.conj().mul(x.coeffs[k + m]).compose_sigma(k))
                acc = acc.mul(fam.get(m))
                assert acc.add(coefficient(psq, m).scale(-1)).sup_norm() <= 1e-9
            # character-level form at interior points
            for p in sp.representative_points():
                n = minimal_interior_order(system, p)
                if n is None:
                    continue
                for c in CircleGrid(4).samples:
                    got = eval_character(system, TorusCharacter(p, n, c), psq,
                                         check=False)
                    want = 0.0
                    for r in range(n):
                        pr = sp.sigma_apply(p, r)
                        inner = sum(f(pr) * c ** ((k - r) // n)
                                    for k, f in x.coeffs.items()
                                    if (k - r) % n == 0)
                        want += abs(inner) ** 2
                    assert got == pytest.approx(want, abs=1e-9)


class TestBasis:
    def test_two_point_swap_census(self, swap2):
        basis = commutant_basis(swap2, 2)
        assert len(basis) == 6
        assert sorted({b.support()[0] for b in basis}) == [-2, 0, 2]
        assert all(is_in_commutant(swap2, b) for b in basis)

    def test_int_shift_only_zero_index(self, int_shift8):
        basis = commutant_basis(int_shift8, 1)
        assert {b.support()[0] for b in basis} == {0}

    def test_one_point_is_the_unitary_family(self, one_point):
        basis = commutant_basis(one_point, 3)
        assert len(basis) == 7
        assert sorted(b.support()[0] for b in basis) == list(range(-3, 4))

    def test_pair_swap_odd_terms_on_fixed_ray(self, tails8):
        basis = commutant_basis(tails8, 1)
        for b in basis:
            k = b.support()[0]
            f = coefficient(b, k)
            if k % 2 == 1:
                assert all(f(p) == 0 for p in tails8.space.window_points
                           if not isinstance(p, ATail))
                assert f(ORIGIN) == 0
            assert is_in_commutant(tails8, b)

    def test_closed_under_product_and_adjoint(self, system):
        basis = commutant_basis(system, 2, data_radius=4)
        rng = random.Random(10)
        sample = rng.sample(basis, min(6, len(basis)))
        for a in sample:
            assert is_in_commutant(system, a.adjoint())
            for b in sample:
                assert is_in_commutant(system, a * b)
