import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from cliffchar.closedform import (
    _EXPLICIT_TABLES,
    UnsupportedDimensionError,
    charpoly_closed,
    charpoly_closed_tuplesum,
    charpoly_explicit,
    closed_coefficient_multivectors,
    explicit_coefficient_multivectors,
    generator_F,
)
from cliffchar.core import Multivector, Signature, all_signatures, random_multivector
from cliffchar.expr import parse_expression
from cliffchar.recursive import charpoly_recursive, det


class TestGeneratorForm:
    @pytest.mark.parametrize("sig", all_signatures(6))
    def test_all_identity_slots_give_identity(self, sig):
        e = Multivector.identity(sig)
        assert generator_F(sig.n, (e,) * sig.N) == e

    def test_single_slot_passthrough_n6(self):
        sig = Signature(3, 3)
        u = random_multivector(sig, random.Random(1))
        e = Multivector.identity(sig)
        assert generator_F(6, (u,) + (e,) * 7) == u

    @pytest.mark.parametrize("sig", [Signature(2, 2), Signature(1, 3), Signature(4, 2)])
    def test_full_tuple_gives_determinant(self, sig):
        u = random_multivector(sig, random.Random(2))
        full = generator_F(sig.n, (u,) * sig.N)
        assert full.is_scalar()
        assert full.scalar_part() == det(u)

    def test_arity_validation(self):
        sig = Signature(2, 0)
        u = Multivector.identity(sig)
        with pytest.raises(ValueError):
            generator_F(2, (u, u, u))
        with pytest.raises(UnsupportedDimensionError):
            generator_F(7, (u,) * 16)


class TestCharpolyClosed:
    def test_published_values_cl50(self):
        u = parse_expression("e1 + e5 + e15", Signature(5, 0))
        assert charpoly_closed(u).coeffs == (0, 4, 0, -6, 0, 4, 0, -1)

    @pytest.mark.parametrize("sig", all_signatures(6))
    def test_identity_element_binomials(self, sig):
        cp = charpoly_closed(Multivector.identity(sig))
        assert cp.coeffs == tuple(
            (-1) ** (i + 1) * comb(sig.N, i) for i in range(1, sig.N + 1)
        )

    @pytest.mark.parametrize("sig", all_signatures(6))
    def test_matches_recursive(self, sig):
        rng = random.Random(100 + sig.p * 16 + sig.q)
        for _ in range(3):
            u = random_multivector(sig, rng)
            assert charpoly_closed(u).coeffs == charpoly_recursive(u)[0].coeffs

    @pytest.mark.parametrize("sig", all_signatures(4))
    def test_regrouped_sum_equals_literal_tuple_sum(self, sig):
        rng = random.Random(7)
        for _ in range(3):
            u = random_multivector(sig, rng)
            assert charpoly_closed(u).coeffs == charpoly_closed_tuplesum(u).coeffs

    @pytest.mark.parametrize("sig", [Signature(5, 0), Signature(2, 3), Signature(3, 3), Signature(0, 6)])
    def test_regrouped_sum_equals_literal_tuple_sum_large(self, sig):
        u = random_multivector(sig, random.Random(8), -3, 3)
        assert charpoly_closed(u).coeffs == charpoly_closed_tuplesum(u).coeffs

    def test_unsupported_dimension(self):
        u = Multivector.identity(Signature(4, 3))
        with pytest.raises(UnsupportedDimensionError):
            charpoly_closed(u)

    def test_coefficients_are_pure_scalars(self):
        rng = random.Random(9)
        for sig in all_signatures(6):
            u = random_multivector(sig, rng)
            for mv in closed_coefficient_multivectors(u):
                assert mv.is_scalar()

    def test_trace_and_determinant_slots(self):
        rng = random.Random(10)
        for sig in all_signatures(6):
            u = random_multivector(sig, rng)
            cp = charpoly_closed(u)
            assert cp.c(1) == sig.N * u.scalar_part()
            assert -cp.c(sig.N) == det(u)


class TestCharpolyExplicit:
    def test_term_counts_match_binomials(self):
        for n, table in _EXPLICIT_TABLES.items():
            N = 1 << ((n + 1) // 2)
            assert len(table) == N
            for k, terms in enumerate(table, start=1):
                assert len(terms) == comb(N, k)
                assert len(set(terms)) == len(terms)

    def test_identity_element_cl13(self):
        cp = charpoly_explicit(Multivector.identity(Signature(1, 3)))
        assert cp.coeffs == (4, -6, 4, -1)

    def test_published_values_cl50(self):
        u = parse_expression("e1 + e5 + e15", Signature(5, 0))
        assert charpoly_explicit(u).coeffs == (0, 4, 0, -6, 0, 4, 0, -1)

    @pytest.mark.parametrize("sig", all_signatures(5, min_n=4))
    def test_matches_closed_and_recursive(self, sig):
        rng = random.Random(200 + sig.p * 16 + sig.q)
        for _ in range(3):
            u = random_multivector(sig, rng)
            ce = charpoly_explicit(u)
            assert ce.coeffs == charpoly_closed(u).coeffs
            assert ce.coeffs == charpoly_recursive(u)[0].coeffs

    def test_coefficients_are_pure_scalars(self):
        rng = random.Random(11)
        for sig in all_signatures(5, min_n=4):
            u = random_multivector(sig, rng)
            for mv in explicit_coefficient_multivectors(u):
                assert mv.is_scalar()

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_unsupported_dimension(self, n):
        u = Multivector.identity(Signature(n, 0))
        with pytest.raises(UnsupportedDimensionError):
            charpoly_explicit(u)


class TestTupleSumStructure:
    """The regrouped evaluation must agree with per-tuple sums coefficient by
    coefficient, not just after scalar extraction."""

    def test_single_coefficient_raw_sum(self):
        sig = Signature(2, 1)
        u = random_multivector(sig, random.Random(12))
        e = Multivector.identity(sig)
        mvs = closed_coefficient_multivectors(u)
        for k in range(1, sig.N + 1):
            acc = Multivector.zero(sig)
            for positions in combinations(range(sig.N), k):
                xs = [u if i in positions else e for i in range(sig.N)]
                acc = acc + generator_F(sig.n, xs)
            if k % 2 == 0:
                acc = -acc
            assert acc == mvs[k - 1]

    def test_rational_weights_survive(self):
        # the two n=6 parts carry exact 1/3 and 2/3 weights
        sig = Signature(6, 0)
        u = random_multivector(sig, random.Random(13))
        cp = charpoly_closed(u)
        assert all(Fraction(c).denominator == 1 for c in cp.coeffs)
