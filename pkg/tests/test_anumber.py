"""a-number computations: worked example, dual-method agreement, invariants."""

import numpy as np
import pytest

from asnum.anumber import (
    ANumberReport,
    CoverDifferential,
    KernelTuple,
    a_number_fast,
    a_number_oracle,
    cartier_matrix,
    is_regular,
    obstruction_matrix,
    obstruction_vector,
    p_rank,
    reconstruct,
    report,
)
from asnum.curve import BasicCurve, domain_basis
from asnum.fppoly import Differential, FpPoly, cartier, parse_poly, section_after_cartier
from asnum.linalg import rank_nullity
from asnum.experiments import sample_poly


def make(p, text):
    return BasicCurve.from_poly(p, parse_poly(text, p))


def random_curve(p, d, rng):
    return BasicCurve.from_poly(p, sample_poly(p, d, rng))


def random_kernel_tuple(curve, rng):
    vec = [int(v) for v in rng.integers(0, curve.p, size=curve.dim_domain)]
    return KernelTuple.from_coefficients(curve, vec)


class TestWorkedExampleD11:
    def setup_method(self):
        self.curve = make(5, "x^11")

    def test_gamma_of_unit_1_3(self):
        w = reconstruct(self.curve, KernelTuple.unit(self.curve, 1, 3))
        assert w.omega[1] == Differential.monomial(5, 3)
        assert w.omega[0] == Differential.monomial(5, 14)
        assert w.omega[2].is_zero and w.omega[3].is_zero and w.omega[4].is_zero
        assert not is_regular(self.curve, w)

    def test_regular_exactly_for_j_in_0_1_2_5(self):
        for j in (0, 1, 2, 3, 5):
            w = reconstruct(self.curve, KernelTuple.unit(self.curve, 1, j))
            assert is_regular(self.curve, w) == (j in (0, 1, 2, 5)), j

    def test_obstruction_vector_of_unit_1_3(self):
        vec = obstruction_vector(self.curve, KernelTuple.unit(self.curve, 1, 3))
        # the x^14 term sits in the second level-0 slot (slots start at 9)
        expected = [0] * self.curve.dim_obstruction
        expected[1] = 1
        assert list(vec) == expected


class TestReconstruct:
    def test_level_zero_units_pass_through(self):
        for p, text in ((3, "x^4+x^2"), (5, "x^11"), (7, "x^5+2*x^3")):
            c = make(p, text)
            for j in (0, 1):
                w = reconstruct(c, KernelTuple.unit(c, 0, j))
                assert w.omega[0] == Differential.monomial(p, j)
                assert all(w.omega[i].is_zero for i in range(1, p))

    def test_p3_closed_recursion(self):
        # for p = 3 the recursion collapses to one projection:
        # (h0, h1, 0) maps to (h0 + project(h1 * f)) + h1 y
        rng = np.random.default_rng(5)
        for _ in range(20):
            c = random_curve(3, 8, rng)
            v = random_kernel_tuple(c, rng)
            w = reconstruct(c, v)
            h0, h1 = v.nu[0].h, v.nu[1].h
            assert w.omega[1].h == h1
            assert w.omega[0].h == (
                h0 + section_after_cartier(Differential(h1 * c.f)).h
            )
            assert w.omega[2].is_zero

    def test_linearity(self):
        rng = np.random.default_rng(17)
        for p, d in ((3, 10), (5, 7), (7, 5)):
            c = random_curve(p, d, rng)
            for _ in range(5):
                u = random_kernel_tuple(c, rng)
                v = random_kernel_tuple(c, rng)
                lhs = reconstruct(c, u + v)
                rhs_u = reconstruct(c, u)
                rhs_v = reconstruct(c, v)
                for i in range(p):
                    assert lhs.omega[i] == rhs_u.omega[i] + rhs_v.omega[i]

    def test_components_respect_comp_bound_and_slot_structure(self):
        rng = np.random.default_rng(23)
        for p, d in ((3, 14), (5, 12)):
            c = random_curve(p, d, rng)
            for _ in range(10):
                w = reconstruct(c, random_kernel_tuple(c, rng))
                for i in range(p):
                    h = w.omega[i].h
                    assert h.degree <= c.comp_bound[i]
                    # above reg_bound only slot exponents may carry coefficients
                    for e in range(max(c.reg_bound[i] + 1, 0), len(h.coeffs)):
                        if (e + 1) % p != 0:
                            assert h.coeff(e) == 0


class TestObstructionMap:
    def test_zero_vector_iff_regular(self):
        rng = np.random.default_rng(29)
        for p, d in ((3, 10), (5, 8)):
            c = random_curve(p, d, rng)
            for _ in range(30):
                v = random_kernel_tuple(c, rng)
                w = reconstruct(c, v)
                vec = obstruction_vector(c, v)
                assert is_regular(c, w) == (not any(vec))

    def test_obstruction_kernel_gives_regular_differentials(self):
        from asnum.linalg import kernel_basis

        rng = np.random.default_rng(53)
        for p, d in ((3, 10), (5, 8)):
            c = random_curve(p, d, rng)
            vectors = kernel_basis(obstruction_matrix(c))
            assert vectors  # the a-number is at least the positive lower bound here
            for coords in vectors:
                v = KernelTuple.from_coefficients(c, [int(x) for x in coords])
                assert is_regular(c, reconstruct(c, v))
                assert not any(obstruction_vector(c, v))

    def test_matrix_columns_match_vectors(self):
        rng = np.random.default_rng(31)
        cases = [make(3, "x^4+x^2"), make(5, "x^11"), make(5, "x^16+x^14+x^9")]
        cases += [random_curve(7, 10, rng), random_curve(3, 17, rng)]
        for c in cases:
            m = obstruction_matrix(c).a
            assert m.shape == (c.dim_obstruction, c.dim_domain)
            for k, (i, j) in enumerate(domain_basis(c)):
                vec = obstruction_vector(c, KernelTuple.unit(c, i, j))
                assert tuple(int(x) for x in m[:, k]) == vec, (c.f, i, j)

    def test_shapes_on_degenerate_curves(self):
        c = make(3, "x^2")
        assert obstruction_matrix(c).a.shape == (1, 1)
        assert a_number_fast(c) == 1
        c = make(3, "x")
        assert obstruction_matrix(c).a.shape == (0, 0)
        assert a_number_fast(c) == 0


class TestANumbers:
    def test_known_values(self):
        assert a_number_fast(make(5, "x^11+x^8")) == 10
        assert a_number_fast(make(3, "x^2")) == 1
        assert a_number_fast(make(5, "x^16+x^14+x^9")) == 15
        assert a_number_fast(make(3, "x^4+x^2")) == 2

    def test_oracle_known_values(self):
        assert a_number_oracle(make(5, "x^11+x^8")) == 10
        assert a_number_oracle(make(3, "x^4+x^2")) == 2
        assert a_number_oracle(make(3, "x")) == 0

    def test_cartier_matrix_shapes(self):
        assert cartier_matrix(make(3, "x^2")).a.shape == (1, 1)
        assert rank_nullity(cartier_matrix(make(3, "x^2")))[1] == 1
        c = make(5, "x^11")
        m = cartier_matrix(c)
        assert m.a.shape == (20, 20)
        assert rank_nullity(m)[1] == a_number_fast(c)

    def test_methods_agree_on_random_curves(self):
        rng = np.random.default_rng(37)
        for p in (2, 3, 5, 7):
            for _ in range(12):
                d = int(rng.integers(1, 15))
                if d % p == 0:
                    continue
                c = random_curve(p, d, rng)
                fast = a_number_fast(c)
                assert fast == a_number_oracle(c), c.f
                assert cartier_matrix(c).a.shape == (c.genus, c.genus)

    def test_normalization_invariance(self):
        rng = np.random.default_rng(41)
        for p, d in ((3, 11), (5, 9)):
            for _ in range(8):
                f = sample_poly(p, d, rng)
                h = FpPoly(p, [int(v) for v in rng.integers(0, p, size=d // p + 1)])
                g = f + h ** p - h
                if g.is_zero:
                    continue
                c1 = BasicCurve.from_poly(p, f)
                c2 = BasicCurve.from_poly(p, g)
                assert c1.f == c2.f
                assert a_number_fast(c1) == a_number_fast(c2)

    def test_p2_a_number_is_determined_by_the_degree(self):
        # in characteristic 2 the a-number of every degree-d cover equals the
        # bound, so any deviation here means a pipeline bug
        from asnum.bounds import lower_bound_single
        from asnum.experiments import _rng_for

        for d in range(1, 24, 2):
            expected = lower_bound_single(2, d)
            for index in range(12):
                f = sample_poly(2, d, _rng_for(d, index))
                assert a_number_fast(BasicCurve.from_poly(2, f)) == expected, (d, str(f))

    def test_methods_agree_at_larger_primes(self):
        from asnum.experiments import _rng_for

        for p in (11, 13):
            for d in range(1, 7):
                if d % p == 0:
                    continue
                for index in range(5):
                    f = sample_poly(p, d, _rng_for(100 * p + d, index))
                    c = BasicCurve.from_poly(p, f)
                    assert a_number_fast(c) == a_number_oracle(c), (p, d, str(f))

    def test_p_rank_is_zero(self):
        for p, text in ((3, "x^2"), (5, "x^11"), (3, "x^4+x^2"), (7, "x^10+x^4")):
            assert p_rank(make(p, text)) == 0

    def test_bound_sandwich(self):
        rng = np.random.default_rng(43)
        from asnum.bounds import lower_bound_single

        for p in (3, 5, 7):
            for _ in range(10):
                d = int(rng.integers(1, 14))
                if d % p == 0:
                    continue
                c = random_curve(p, d, rng)
                a = a_number_fast(c)
                assert lower_bound_single(p, d) <= a <= c.genus


class TestReport:
    def test_report_values(self):
        rep = report(make(5, "x^11+x^8"))
        assert rep == ANumberReport(
            a=10,
            method="fast",
            genus=20,
            p_rank=0,
            lower_bound=10,
            dim_domain=18,
            dim_obstruction=18,
        )

    def test_report_genus_one(self):
        rep = report(make(3, "x^2"), method="oracle")
        assert (rep.a, rep.genus, rep.p_rank, rep.lower_bound) == (1, 1, 0, 1)
        assert rep.method == "oracle"

    def test_report_degree_one(self):
        rep = report(make(3, "x"))
        assert (rep.a, rep.genus, rep.p_rank, rep.lower_bound) == (0, 0, 0, 0)

    def test_report_rejects_unknown_method(self):
        with pytest.raises(ValueError):
            report(make(3, "x^2"), method="guess")


class TestKernelTupleValidation:
    def test_rejects_non_kernel_component(self):
        c = make(5, "x^11")
        bad = [Differential.zero(5)] * 5
        bad[0] = Differential.monomial(5, 4)  # x^4 dx survives the Cartier operator
        with pytest.raises(ValueError):
            KernelTuple(c, bad)

    def test_rejects_overweight_component(self):
        c = make(5, "x^11")
        bad = [Differential.zero(5)] * 5
        bad[1] = Differential.monomial(5, 6)  # reg_bound[1] = 5
        with pytest.raises(ValueError):
            KernelTuple(c, bad)

    def test_unit_round_trip(self):
        c = make(5, "x^11")
        basis = domain_basis(c)
        coords = [0] * len(basis)
        coords[3] = 2
        v = KernelTuple.from_coefficients(c, coords)
        i, j = basis[3]
        assert v.nu[i] == Differential.monomial(5, j, 2)


def test_cover_differential_str():
    c = make(5, "x^11")
    w = reconstruct(c, KernelTuple.unit(c, 1, 3))
    assert str(w) == "(x^3) y dx + (x^14) dx"
