from fractions import Fraction as F

import pytest

from zerogeom.polycore import (
    ParseError,
    Poly,
    WeightSeq,
    even_odd_split,
    format_poly_text,
    format_rational,
    format_weights,
    parse_poly,
    parse_poly_json,
    parse_poly_text,
    parse_rational,
    parse_weights,
    poly_arith,
    poly_derivative,
    poly_eval,
    poly_gcd,
    poly_to_json,
    square_free_decomposition,
    square_free_part,
)


class TestEval:
    def test_sum_of_coefficients(self):
        assert poly_eval(Poly([1, 2, 1]), 1) == 4

    def test_zero_poly(self):
        assert poly_eval(Poly(), F(7, 3)) == 0

    def test_negative_one(self):
        assert poly_eval(Poly([1, 3, 1]), -1) == -1

    def test_rational_point(self):
        assert Poly([1, 1])(F(1, 2)) == F(3, 2)


class TestArith:
    def test_square(self):
        assert poly_arith(Poly([1, 1]), Poly([1, 1]), "mul") == Poly([1, 2, 1])

    def test_divrem(self):
        q, r = poly_arith(Poly([1, 0, 1]), Poly([1, 1]), "divrem")
        assert q == Poly([-1, 1]) and r == Poly([2])

    def test_cancellation(self):
        d = Poly([1, 1]) - Poly([1, 1])
        assert d.is_zero() and d.degree == -1

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(Poly([1]), Poly())

    def test_trailing_zeros_trimmed(self):
        assert Poly([1, 2, 0, 0]).coeffs == (1, 2)


class TestDerivative:
    def test_power_rule(self):
        assert poly_derivative(Poly([1, 3, 1])) == Poly([3, 2])

    def test_constant(self):
        assert poly_derivative(Poly([5])).is_zero()

    def test_second_derivative(self):
        assert poly_derivative(Poly.monomial(2), 2) == Poly([2])


class TestGcd:
    def test_common_factor(self):
        assert poly_gcd(Poly([1, 1]) ** 2, Poly([1, 1]) * Poly([2, 1])) == Poly([1, 1])

    def test_coprime(self):
        assert poly_gcd(Poly([1, 0, 1]), Poly([1, 1])) == Poly([1])

    def test_with_zero(self):
        p = Poly([2, 4])
        assert poly_gcd(p, Poly()) == p.monic()

    def test_rational_inputs(self):
        a = Poly([F(1, 2), F(1, 3)]) * Poly([3, 7])
        b = Poly([F(1, 2), F(1, 3)]) * Poly([1, 0, 1])
        assert poly_gcd(a, b) == Poly([F(1, 2), F(1, 3)]).monic()


class TestSquareFree:
    def test_repeated_root(self):
        assert square_free_part(Poly([1, 1]) ** 2) == Poly([1, 1])

    def test_already_square_free(self):
        p = Poly([1, 1]) * Poly([2, 1])
        assert square_free_part(p) == p.monic()

    def test_monomial(self):
        assert square_free_part(Poly.monomial(3)) == Poly.monomial(1)

    def test_decomposition(self):
        p = Poly([1, 1]) * Poly([2, 1]) ** 3 * Poly([1, 0, 1]) ** 2 * 5
        parts = dict((m, f) for f, m in square_free_decomposition(p))
        assert parts == {1: Poly([1, 1]), 2: Poly([1, 0, 1]), 3: Poly([2, 1])}


class TestEvenOdd:
    def test_split(self):
        assert even_odd_split(Poly([1, 2, 1])) == (Poly([1, 1]), Poly([2]))

    def test_pure_odd(self):
        pe, po = even_odd_split(Poly.monomial(1))
        assert pe.is_zero() and po == Poly([1])

    def test_pure_even(self):
        pe, po = even_odd_split(Poly([1, 0, 3, 0, 1]))
        assert pe == Poly([1, 3, 1]) and po.is_zero()


class TestFormats:
    def test_parse_text(self):
        assert parse_poly_text("1 3/2 -1") == Poly([1, F(3, 2), -1])

    def test_parse_json(self):
        assert parse_poly_json('{"coeffs": ["1", "3", "1"]}') == Poly([1, 3, 1])

    def test_dispatch(self):
        assert parse_poly('{"coeffs": ["1/2"]}') == parse_poly("1/2\n")

    @pytest.mark.parametrize("bad", ["1 2/ 3", "1 x", "1 2/0", "1.5", "1/-2", "--1"])
    def test_malformed_text(self, bad):
        with pytest.raises(ParseError) as ei:
            parse_poly_text(bad)
        assert ei.value.position is not None

    def test_error_position(self):
        with pytest.raises(ParseError) as ei:
            parse_poly_text("1 2 oops")
        assert ei.value.position == 2

    @pytest.mark.parametrize("bad", ['{"coeffs": ["1", "a"]}', '{"coeffs": 3}', '{"c": []}', "{", '{"coeffs": [1.5]}'])
    def test_malformed_json(self, bad):
        with pytest.raises(ParseError):
            parse_poly_json(bad)

    def test_rational_roundtrip(self):
        for s in ["3/4", "-5", "0", "10/2"]:
            x = parse_rational(s)
            assert parse_rational(format_rational(x)) == x
        assert format_rational(F(5)) == "5/1"

    def test_text_roundtrip(self):
        p = Poly([F(-1, 3), 0, 7])
        assert parse_poly_text(format_poly_text(p)) == p
        assert format_poly_text(Poly()) == "0"

    def test_json_shape(self):
        assert poly_to_json(Poly([1, F(1, 2)])) == {"coeffs": ["1/1", "1/2"]}


class TestWeights:
    def test_dense(self):
        w = parse_weights("1,-1")
        assert w[0] == 1 and w[1] == -1 and w[5] == 0

    def test_sparse(self):
        w = parse_weights("0:1, 2:-1/2")
        assert w.upto(3) == [1, 0, F(-1, 2), 0]

    def test_zero_entries_dropped(self):
        assert WeightSeq.dense([0, 0, 1]).entries == ((2, F(1)),)

    def test_format_roundtrip(self):
        w = WeightSeq({3: F(2, 3), 0: 1})
        assert parse_weights(format_weights(w)) == w

    @pytest.mark.parametrize("bad", ["1,,2", "a:1", "0:x", "1, 2/0"])
    def test_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_weights(bad)
