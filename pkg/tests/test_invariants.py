import math
from fractions import Fraction

import pytest

from unknot_lmov.arith import binom_z, common_divisors, mobius
from unknot_lmov.invariants import (
    Q_L_MINUS_M_HALF,
    Q_M_HALF_MINUS_L,
    ChargeConvention,
    N_to_n,
    TheoremViolation,
    bps_table,
    bps_table_mu,
    c_ml,
    cleared_z_m,
    f_mu,
    f_mu_decompositions,
    g_m,
    g_mu,
    genus0_matches,
    genus0_row,
    gks_extremal,
    n_ml,
    n_pair,
    n_to_N,
    pair_genus0_coefficient,
    phi,
    phi_character,
    quantum_ratio,
    resolve_charge_convention,
    resolve_orientation,
    unknot_w,
    z2_g,
    z2_g_mu,
    z_m,
    z_m_closed,
    z_mu,
    z_mu_phi,
)
from unknot_lmov.laurent import BpsTable, LFrac, LPoly, bracket, qbinomial
from unknot_lmov.partitions import Partition, character, enumerate_partitions

TAUS = range(-3, 4)


def sign(n):
    return -1 if n % 2 else 1


# -- closed formulas ---------------------------------------------------------


def test_c_ml_examples():
    for tau in TAUS:
        assert c_ml(1, 0, tau) == sign(tau)
    for m in range(1, 8):
        assert c_ml(m, 0, 0) == Fraction(1, m * m)
    assert c_ml(2, 1, 1) == 1


def test_n_ml_examples():
    for tau in TAUS:
        assert n_ml(1, 0, tau) == sign(tau)
    assert n_ml(1, 0, 0) == 1
    for m in range(2, 12):
        assert n_ml(m, 0, 0) == 0
    assert n_ml(2, 1, 1) == 1


def test_n_ml_vanishes_beyond_m():
    for m in range(1, 10):
        for l in range(m + 1, m + 6):
            for tau in TAUS:
                assert n_ml(m, l, tau) == 0


def test_n_pair_examples():
    for tau in range(-6, 7):
        assert n_pair(1, 1, tau) == tau * (tau + 1) // 2
    assert n_pair(2, 2, 1) == 4
    for m1 in range(1, 7):
        for m2 in range(1, 7):
            for tau in TAUS:
                assert n_pair(m1, m2, tau) == n_pair(m2, m1, tau)


def test_gks_extremal_small_values():
    for p in (-1, -2, -5):
        assert gks_extremal(p, 1, "-") == -1
        assert gks_extremal(p, 1, "+") == 1
    # -(-1)^(1+1) C(1, 0) = -1 at r = 1
    for p in (2, 3, 8):
        assert gks_extremal(p, 1, "-") == -1
        assert gks_extremal(p, 1, "+") == -1
    # r = 2, p = -1: -(C(5,1) - C(2,0))/4 = -1
    assert gks_extremal(-1, 2, "-") == -1
    for p in (0, 1):
        with pytest.raises(ValueError):
            gks_extremal(p, 3, "-")


# -- quantum building blocks -------------------------------------------------


def test_quantum_ratio():
    assert quantum_ratio(3, 0) == LPoly.const(3)
    assert quantum_ratio(2, 1) == LPoly({(1, 0): 1, (-1, 0): 1})
    for k in range(1, 7):
        for b in range(-6, 7):
            if b:
                assert quantum_ratio(k, b) * bracket(b) == bracket(k * b)


def test_phi_examples():
    for tau in (-3, -1, 1, 2, 3):
        assert phi(2, Partition((1, 1)), tau) == LPoly({(2 * tau, 0): 1, (-2 * tau, 0): -1})
        assert phi(1, Partition((1,)), tau) == LPoly.const(1)
    assert phi(2, Partition((1, 1)), 2) == LPoly({(4, 0): 1, (-4, 0): -1})


def test_phi_matches_character_sum():
    for d in range(1, 7):
        for nu in enumerate_partitions(d):
            for tau in TAUS:
                assert phi(d, nu, tau) == phi_character(Partition((d,)), nu, tau)


# -- Z_m, closed form, g_m ---------------------------------------------------


def test_z_m_one():
    for tau in TAUS:
        z2z = (z_m(1, tau) * bracket(1) ** 2).to_lpoly()
        assert z2z == bracket(1, "a").scalar_mul(sign(tau))


def test_z_m_at_zero_framing():
    for m in range(1, 7):
        assert z_m(m, 0) == LFrac(bracket(m, "a"), {m: 2})


def test_z_m_matches_brute_force_partition_sum():
    # direct evaluation at a rational point, with no regularization or cancelling
    qh, ah = Fraction(3, 2), Fraction(5, 7)

    def br(n, x):
        return x**n - x ** (-n)

    for m in range(1, 5):
        for tau in (-2, -1, 1, 2):
            total = Fraction(0)
            for nu in enumerate_partitions(m):
                t = Fraction(1, nu.zee)
                for part in nu:
                    t *= br(m * part * tau, qh) / br(part, qh) * br(part, ah)
                total += t / (br(m, qh) * br(m * tau, qh))
            assert z_m(m, tau).evaluate(qh, ah) == sign(m * tau) * total


def test_z2_z_m_is_palindromic():
    for m in range(1, 6):
        for tau in TAUS:
            f = (z_m(m, tau) * bracket(1) ** 2).to_lpoly()
            if f is not None:
                assert f.substitute_power(-1, 1) == f


def test_closed_form_matches_partition_sum():
    for m in range(1, 6):
        for tau in (-3, -2, -1, 1, 2, 3):
            closed = z_m_closed(m, tau)
            assert closed.is_integral()
            assert closed == cleared_z_m(m, tau).scalar_mul(sign(m * tau))
            assert closed == (z_m(m, tau) * bracket(m) * bracket(m * tau)).to_lpoly().scalar_mul(sign(m * tau))


def test_closed_form_rejects_zero_framing():
    with pytest.raises(ValueError):
        z_m_closed(2, 0)


def test_closed_form_literal_signs_are_off_by_minus_one_to_the_m():
    # The generating function with (1 + ...)/(1 + ...) gives the alternating sign on k, not on j.
    for m in range(1, 6):
        for tau in (1, 2, 3):
            n = m * tau
            literal = LPoly()
            for j in range(m + 1):
                k = m - j
                mono = LPoly.monomial(j * (j - 1) - (n - 1) * m, k - j, sign(k))
                literal = literal + mono * qbinomial(n, j) * qbinomial(n + k - 1, k)
            assert literal == z_m_closed(m, tau).scalar_mul(sign(m))


def test_g_m_at_zero_framing_collapses():
    assert (g_m(1, 0) * bracket(1) ** 2).to_lpoly() == bracket(1, "a")
    for m in range(2, 8):
        assert g_m(m, 0).to_lpoly() == LPoly()


def test_bps_table_for_m_one():
    for tau in TAUS:
        assert bps_table(1, tau) == BpsTable({(0, 1): sign(tau), (0, -1): -sign(tau)})


def test_bps_tables_are_integral_and_finite():
    for m in range(1, 6):
        for tau in TAUS:
            t = bps_table(m, tau)
            assert t.is_integral()
            assert t.expand() == z2_g(m, tau)


def test_bps_table_matches_general_pipeline():
    for m in range(1, 5):
        for tau in TAUS:
            assert bps_table(m, tau) == bps_table_mu(Partition((m,)), tau)


def test_bps_table_three_two():
    t = bps_table(3, 2)
    assert t.max_genus == 4
    assert t[(4, 3)] == 1 and t[(4, 1)] == -1
    assert sum(t[(0, q2)] for q2 in (-3, -1, 1, 3)) == 0


# -- W, Z_mu, F_mu, g_mu -----------------------------------------------------


def test_unknot_w_small():
    assert unknot_w(Partition(())) == LFrac(1)
    assert unknot_w(Partition((1,))) == LFrac(bracket(1, "a"), {1: 1})
    w2 = LFrac(bracket(2, "a"), {2: 1}) * Fraction(1, 2) + LFrac(bracket(1, "a") ** 2, {1: 2}) * Fraction(1, 2)
    assert unknot_w(Partition((2,))) == w2


def test_unknot_w_is_the_quantum_dimension_at_a_equal_q_to_the_n():
    qh = Fraction(2)

    def br(n):
        return qh**n - qh ** (-n)

    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            conj = lam.transpose()
            for N in range(1, 5):
                expected = Fraction(1)
                for i, row in enumerate(lam):
                    for j in range(row):
                        hook = row - j + conj[j] - i - 1
                        expected *= br(N + j - i) / br(hook)
                assert unknot_w(lam).evaluate(qh, qh**N) == expected


def test_z_mu_routes_agree():
    assert z_mu(Partition(()), 1) == LFrac(1)
    for m in range(1, 5):
        for tau in TAUS:
            assert z_mu(Partition((m,)), tau) == z_m(m, tau) * bracket(m)
    for mu in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        for tau in TAUS:
            assert z_mu(Partition(mu), tau) == z_mu_phi(Partition(mu), tau)
    two = sum((unknot_w(lam) * character(lam, (1, 1)) for lam in enumerate_partitions(2)), LFrac(0))
    assert z_mu(Partition((1, 1)), 0) == two


def test_f_mu_small_cases():
    for tau in (-1, 0, 2):
        F = f_mu(2, tau)
        z1, z11 = z_mu(Partition((1,)), tau), z_mu(Partition((1, 1)), tau)
        assert F[Partition((1,))] == z1
        assert F[Partition((1, 1))] == z11 * Fraction(1, 2) - z1 * z1 * Fraction(1, 2)


def test_f_mu_log_matches_decompositions():
    for tau in (-1, 0, 2):
        F = f_mu(4, tau)
        for n in range(1, 5):
            for mu in enumerate_partitions(n):
                assert F[mu] == f_mu_decompositions(mu, tau)


def test_g_mu_matches_g_m():
    for m in range(1, 5):
        for tau in TAUS:
            assert g_mu(Partition((m,)), tau) == g_m(m, tau)


def test_g_mu_one_and_one_one():
    for tau in TAUS:
        assert z2_g_mu(Partition((1,)), tau) == bracket(1, "a").scalar_mul(sign(tau))
        assert pair_genus0_coefficient(1, 1, tau, 1) == n_pair(1, 1, tau)


def test_character_transform_round_trip():
    for n in range(1, 5):
        for tau in (-1, 0, 1):
            tables = {mu: bps_table_mu(mu, tau) for mu in enumerate_partitions(n)}
            N = n_to_N(tables)
            assert N_to_n(N) == tables
            if n == 1:
                assert N == tables


def test_transformed_tables_are_integral():
    for n in range(1, 4):
        for tau in range(-2, 3):
            tables = {mu: bps_table_mu(mu, tau) for mu in enumerate_partitions(n)}
            assert all(t.is_integral() for t in n_to_N(tables).values())


def test_n_to_N_needs_complete_weight():
    with pytest.raises(ValueError):
        n_to_N({Partition((2,)): BpsTable()})


# -- charge conventions ------------------------------------------------------


def test_genus0_row_is_minus_n_ml():
    for m in range(1, 5):
        for tau in range(-2, 3):
            assert genus0_row(m, tau, Q_L_MINUS_M_HALF) == {l: -n_ml(m, l, tau) for l in range(m + 1)}
            assert genus0_row(m, tau, Q_M_HALF_MINUS_L) == {l: n_ml(m, l, -tau) for l in range(m + 1)}
            assert genus0_matches(m, tau, Q_L_MINUS_M_HALF, -1)


def test_no_pure_orientation_reproduces_n_ml():
    # m = 2, l = 1 sits at Q = 0 in both orientations: the row has -1, n_{2,1}(1) = 1
    assert bps_table(2, 1)[(0, 0)] == -1 and n_ml(2, 1, 1) == 1
    with pytest.raises(TheoremViolation):
        resolve_orientation()


def test_charge_convention_with_sign():
    assert resolve_charge_convention() == ChargeConvention(Q_L_MINUS_M_HALF, -1)
    assert str(resolve_charge_convention()) == "Q=l-m/2;sign=-1"


def _pair_with_framing_sign(m1, m2, tau):
    total = 0
    for d in common_divisors(m1, m2):
        a, b = m1 // d, m2 // d
        total += mobius(d) * sign((a + b) * tau) * binom_z(a * tau + a - 1, a) * binom_z(b * tau + b, b)
    return Fraction(total, m1 + m2)


def test_pair_coefficient_follows_the_framing_sign():
    for s in range(2, 7):
        for m1 in range((s + 1) // 2, s):
            for tau in TAUS:
                assert pair_genus0_coefficient(m1, s - m1, tau) == _pair_with_framing_sign(m1, s - m1, tau)


def test_pair_coefficient_and_closed_formula_disagree_at_four_two():
    assert (pair_genus0_coefficient(4, 2, 1), n_pair(4, 2, 1)) == (36, 34)
    assert (pair_genus0_coefficient(4, 2, 3), n_pair(4, 2, 3)) == (6384, 6356)
