"""Property-based checks of the algebraic invariants."""

import math
from fractions import Fraction as F
from math import comb

import numpy as np
from hypothesis import assume, given, settings, strategies as st

from zerogeom.acceptance import numeric_weakly_hurwitz
from zerogeom.conjectures import boros_moll_row
from zerogeom.polycore import (
    Poly,
    WeightSeq,
    even_odd_split,
    poly_derivative,
    poly_gcd,
    square_free_part,
)
from zerogeom.rootcert import (
    Verdict,
    complex_roots_numeric,
    count_real_roots,
    in_p_plus_or_zero,
    is_in_p_plus,
    is_weakly_hurwitz,
    isolate_roots,
    refine_interval,
    szasz_bound,
)
from zerogeom.symfunc import Region, elem_sym_all, gws_witness, verify_identity, w_mu_n_eval
from zerogeom.transforms import (
    binomial_poly,
    clear_joukowski,
    gamma_from_mu,
    mu_from_gamma,
    odd_even_weights,
    op_L,
    op_S_r,
    op_T_mu,
    op_U_alpha,
    op_V_alpha,
    p_mu_n,
    sr_exp_coeff,
)

settings.register_profile("repo", deadline=None, max_examples=60)
settings.load_profile("repo")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive = st.fractions(min_value=F(1, 12), max_value=10, max_denominator=12)
polys = st.lists(rationals, min_size=0, max_size=7).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
weights = st.dictionaries(st.integers(0, 5), rationals.filter(bool), max_size=4).map(WeightSeq)


def negative_rooted(rhos):
    p = Poly([1])
    for r in rhos:
        p = p * Poly([1, r])
    return p


# -- polycore ---------------------------------------------------------------

@given(polys)
def test_even_odd_reconstruction(p):
    pe, po = even_odd_split(p)
    assert pe.substitute_power(2) + po.substitute_power(2).shift_degree(1) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly() and a * Poly([1]) == a


@given(polys, nonzero_polys)
def test_divrem_round_trip(p, q):
    quot, rem = divmod(p, q)
    assert q * quot + rem == p
    assert rem.degree < q.degree


@given(nonzero_polys.filter(lambda p: p.degree >= 1))
def test_square_free_is_coprime_to_derivative(p):
    s = square_free_part(p)
    assert poly_gcd(s, poly_derivative(s)) == Poly([1])
    assert (p % s).is_zero()


# -- rootcert ---------------------------------------------------------------

@given(st.lists(rationals, min_size=1, max_size=10))
def test_sturm_counts_distinct_linear_factors(rs):
    p = Poly.from_roots(rs)
    assert count_real_roots(p) == len(set(rs))


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6), st.integers(-7, 7), st.integers(-7, 7))
def test_sturm_window_counts(rs, lo, hi):
    assume(lo < hi)
    p = Poly.from_roots(rs)
    assert count_real_roots(p, lo, hi) == len({r for r in rs if lo < r <= hi})


@settings(max_examples=30)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=6),
       st.lists(st.tuples(rationals, positive), max_size=2))
def test_isolation_matches_numeric_roots(rs, quads):
    p = Poly.from_roots(rs)
    for b, c in quads:
        p = p * Poly([b * b / 4 + c, b, 1])          # no real zeros
    ivs = isolate_roots(p)
    assert [iv.multiplicity for iv in ivs] == [rs.count(r) for r in sorted(set(rs))]
    num = complex_roots_numeric(Poly.from_roots(sorted(set(rs)))).roots
    num = sorted(r.real for r in num)
    for iv, x in zip(ivs, num):
        mid = float(refine_interval(p, iv, F(1, 10 ** 13)).midpoint)
        assert abs(mid - x) < 1e-9


@given(st.lists(positive, min_size=1, max_size=8))
def test_negative_rooted_products_in_p_plus(rhos):
    assert is_in_p_plus(negative_rooted(rhos), isolate=False).verdict is Verdict.IN_P_PLUS


@settings(max_examples=40)
@given(st.lists(positive, min_size=2, max_size=9, unique=True), st.sampled_from([1, -1, F(5, 3)]))
def test_hurwitz_from_interlacing_pair(xs, scale):
    # alternate sorted negative zeros between the even and the odd part
    xs = sorted(xs)
    e_roots = [-x for x in xs[0::2]]
    o_roots = [-x for x in xs[1::2]]
    pe, po = Poly.from_roots(e_roots), Poly.from_roots(o_roots)
    p = (pe.substitute_power(2) + po.substitute_power(2).shift_degree(1)) * scale
    assert even_odd_split(p) == (pe * scale, po * scale)
    assert is_weakly_hurwitz(p).verdict is Verdict.WEAKLY_HURWITZ
    assert numeric_weakly_hurwitz(p)


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-10, 10), st.integers(-10, 10)), min_size=1, max_size=4))
def test_hurwitz_agrees_with_numpy(factors):
    p = Poly([1])
    for b, c in factors:
        p = p * Poly([c, b, 1])
    assume(not p.is_zero())
    exact = is_weakly_hurwitz(p).verdict is Verdict.WEAKLY_HURWITZ
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    # numpy's companion solver loses accuracy on repeated imaginary-axis roots; skip those
    assume(all(abs(r.real) > 1e-6 or abs(r.real) < 1e-12 for r in roots))
    assert exact == bool(np.all(roots.real <= 1e-9))


@given(st.lists(positive, min_size=1, max_size=8), st.floats(0, 4), st.floats(-math.pi, math.pi))
def test_szasz_bound(rhos, r, phi):
    p = negative_rooted(rhos)
    z = complex(r * math.cos(phi), r * math.sin(phi))
    assert abs(complex(p(z))) <= szasz_bound(p, z) * (1 + 1e-6)


# -- transforms -------------------------------------------------------------

@given(st.lists(positive, min_size=0, max_size=12))
def test_L_preserves_p_plus(rhos):
    assert in_p_plus_or_zero(op_L(negative_rooted(rhos)))


@given(polys)
def test_operator_coincidences(p):
    assert op_U_alpha(p, WeightSeq.dense([1, -1])) == op_L(p)
    assert op_S_r(p, 1) == op_L(p)


@given(polys, weights, weights)
def test_T_splits_into_U_and_V(p, alpha, beta):
    mu = WeightSeq(odd_even_weights(alpha).as_dict() | odd_even_weights(beta, odd=True).as_dict())
    t_even, t_odd = even_odd_split(op_T_mu(p, mu))
    assert t_even == op_U_alpha(p, alpha)
    assert t_odd == op_V_alpha(p, beta)


@given(weights, st.integers(0, 10))
def test_cleared_joukowski_identity(mu, n):
    assert op_T_mu(binomial_poly(n), mu) == clear_joukowski(p_mu_n(mu, n), n)


@given(st.lists(rationals, min_size=1, max_size=21))
def test_chebyshev_round_trip(vals):
    mu = WeightSeq.dense(vals)
    K = 20
    assert mu_from_gamma(gamma_from_mu(mu, K), K).upto(K) == mu.upto(K)


@given(st.integers(0, 5), st.integers(0, 12), st.booleans())
def test_sr_exp_coeff_against_truncated_series(r, k, shifted):
    from zerogeom.acceptance import sr_exp_coeff_oracle

    assert sr_exp_coeff(r, k, shifted) == sr_exp_coeff_oracle(r, k, shifted)


# -- symfunc ----------------------------------------------------------------

@settings(max_examples=30)
@given(weights, st.integers(0, 12), st.integers(0, 2 ** 32))
def test_el_exp_random(mu, n, seed):
    assert verify_identity("el-exp", mu, n, "random", trials=3, seed=seed).verdict


@given(weights, st.integers(0, 8), rationals)
def test_w_on_the_diagonal_is_T_of_binomial(mu, n, w):
    assert w_mu_n_eval(mu, [w] * n) == op_T_mu(binomial_poly(n), mu)(w)


@given(st.lists(rationals, min_size=0, max_size=8))
def test_elementary_generating_function(pts):
    # prod (1 + x_i t) has coefficients e_k
    assert Poly(elem_sym_all(pts)) == negative_rooted(pts)


@settings(max_examples=50)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=n + 1, max_size=n + 1)
      .filter(lambda c: c[-1] != 0),
    st.lists(st.fractions(min_value=F(1, 4), max_value=5, max_denominator=4), min_size=n, max_size=n))))
def test_gws_witness_found(args):
    c, pts = args
    z = gws_witness(c, pts, Region.right_half_plane())
    assert z is not None and z.real > -1e-9


# -- Boros-Moll -------------------------------------------------------------

@given(st.integers(0, 30))
def test_boros_moll_reverse_summation(m):
    # same sum, run from k = m down to l, in integers before the final division
    num = [0] * (m + 1)
    for l in range(m + 1):
        for k in range(m, l - 1, -1):
            num[l] += 2 ** k * comb(2 * m - 2 * k, m - k) * comb(m + k, m) * comb(k, l)
    assert list(boros_moll_row(m).d) == [F(x, 4 ** m) for x in num]
