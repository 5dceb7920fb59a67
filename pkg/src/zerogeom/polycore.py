"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction` throughout (always reduced, positive
denominator).  A :class:`Poly` stores coefficients low degree first with
trailing zeros trimmed, so the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

BigRational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class ParseError(ValueError):
    """Malformed rational or polynomial input.

    ``position`` is the 0-based token index (text format) or array index
    (JSON format) of the offending entry; ``offset`` is the character offset
    in the source line when known.
    """

    def __init__(self, message: str, position: int | None = None, offset: int | None = None):
        self.position = position
        self.offset = offset
        where = []
        if position is not None:
            where.append(f"entry {position}")
        if offset is not None:
            where.append(f"column {offset + 1}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


def parse_rational(token: str) -> Fraction:
    """Parse ``"num/den"`` or a bare integer; nothing else is accepted."""
    token = token.strip()
    if not _RATIONAL_RE.match(token):
        raise ParseError(f"malformed rational {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    """Serialize as ``"num/den"`` (integers keep ``/1`` so the form is uniform)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class Poly:
    """Immutable dense polynomial over the rationals; ``coeffs[k]`` multiplies z**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _trusted(cls, cs: list) -> "Poly":
        # caller guarantees Fraction entries
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "Poly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1 (callers must branch on it)."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({format_poly_text(self)!r})"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "Poly":
        return Poly._trusted([-c for c in self.coeffs])

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._trusted(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._trusted([c * other for c in self.coeffs])
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._trusted(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        inv = 1 / other.coeffs[-1]
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        b = other.coeffs
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db] * inv
            quot[shift] = c
            if c:
                for i in range(db + 1):
                    rem[shift + i] -= c * b[i]
        return Poly._trusted(quot), Poly._trusted(rem[:db])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def derivative(self, times: int = 1) -> "Poly":
        cs = list(self.coeffs)
        for _ in range(times):
            cs = [k * c for k, c in enumerate(cs)][1:]
        return Poly._trusted(cs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = 1 / self.coeffs[-1]
        return Poly._trusted([c * inv for c in self.coeffs])

    def substitute_power(self, m: int) -> "Poly":
        """p(z**m)."""
        out = [Fraction(0)] * (m * self.degree + 1 if self.coeffs else 0)
        for k, c in enumerate(self.coeffs):
            out[m * k] = c
        return Poly._trusted(out)

    def shift_degree(self, m: int) -> "Poly":
        """z**m * p(z)."""
        if self.is_zero():
            return self
        return Poly._trusted([Fraction(0)] * m + list(self.coeffs))

    def reverse(self, n: int | None = None) -> "Poly":
        """z**n * p(1/z) with n defaulting to the degree."""
        n = self.degree if n is None else n
        if self.degree > n:
            raise ValueError("reversal degree below polynomial degree")
        return Poly([self[n - k] for k in range(n + 1)])

    def low_order(self) -> int:
        """Index of the lowest nonzero coefficient (multiplicity of the root 0)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("zero polynomial")


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly([x])
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


# -- operation surface ------------------------------------------------------

def poly_eval(p: Poly, x: Scalar) -> Fraction:
    """Exact Horner evaluation."""
    return p(Fraction(x))


def poly_arith(p: Poly, q: Poly, op: str):
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "divrem":
        return divmod(p, q)
    raise ValueError(f"unknown operation {op!r}")


def poly_derivative(p: Poly, times: int = 1) -> Poly:
    return p.derivative(times)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd, computed with a primitive integer remainder sequence."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    g = int_poly_gcd(to_primitive_int(p), to_primitive_int(q))
    return Poly(g).monic()


def square_free_part(p: Poly) -> Poly:
    """Monic p / gcd(p, p'): same distinct roots, all simple."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if p.degree == 0:
        return Poly([1])
    return (p // poly_gcd(p, p.derivative())).monic()


def square_free_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic square-free, pairwise coprime factors with multiplicities.

    The product of ``f**m`` over the result equals ``p.monic()``.  Factors that
    are constant are dropped.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if not d.is_zero() else b.monic()
        b = b // a
        c = d // a
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


def even_odd_split(p: Poly) -> tuple[Poly, Poly]:
    """(P_E, P_O) with p(z) = P_E(z**2) + z * P_O(z**2)."""
    cs = p.coeffs
    return Poly._trusted(list(cs[0::2])), Poly._trusted(list(cs[1::2]))


# -- integer primitive forms (used by the Sturm machinery) ------------------

def to_primitive_int(p: Poly) -> list[int]:
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    if p.is_zero():
        return []
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in p.coeffs]
    return _primitive(ints)


def _primitive(a: list[int]) -> list[int]:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            return a
    if g in (0, 1):
        return a
    return [x // g for x in a]


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def int_prem(a: list[int], b: list[int]) -> list[int]:
    """Positive integer multiple of the remainder of ``a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    m, s = abs(lc), (1 if lc > 0 else -1)
    while r and len(r) - 1 >= db:
        c = r[-1] * s
        shift = len(r) - 1 - db
        if m != 1:
            r = [m * x for x in r]
        for i, bi in enumerate(b):
            r[i + shift] -= c * bi
        _trim(r)
    return r


def int_poly_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _primitive(int_prem(a, b))
        a, b = b, r
    return a


def int_sign_at(a: Sequence[int], x: Fraction) -> int:
    """Sign of the integer polynomial ``a`` at the rational ``x``."""
    if not a:
        return 0
    num, den = x.numerator, x.denominator
    v = a[-1]
    bp = 1
    for c in reversed(a[:-1]):
        bp *= den
        v = v * num + c * bp
    return (v > 0) - (v < 0)


# -- WeightSeq --------------------------------------------------------------

class WeightSeq:
    """Finitely supported sequence of rationals, zero off its support."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        d: dict[int, Fraction] = {}
        for k, v in items:
            k = int(k)
            if k < 0:
                raise ValueError("negative index in weight sequence")
            if k in d:
                raise ValueError(f"duplicate index {k}")
            v = Fraction(v)
            if v:
                d[k] = v
        object.__setattr__(self, "entries", tuple(sorted(d.items())))

    def __setattr__(self, name, value):
        raise AttributeError("WeightSeq is immutable")

    @classmethod
    def dense(cls, values: Iterable[Scalar]) -> "WeightSeq":
        return cls(enumerate(values))

    def __getitem__(self, k: int) -> Fraction:
        for i, v in self.entries:
            if i == k:
                return v
        return Fraction(0)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.entries)

    def upto(self, K: int) -> list[Fraction]:
        """Dense values for indices 0..K inclusive."""
        out = [Fraction(0)] * (K + 1)
        for i, v in self.entries:
            if i <= K:
                out[i] = v
        return out

    @property
    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else -1

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightSeq) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"WeightSeq({format_weights(self)!r})"


def parse_weights(text: str) -> WeightSeq:
    """``"1,-1,1/2"`` (dense from index 0) or ``"0:1,2:-1"`` (sparse pairs)."""
    text = text.strip()
    if not text:
        return WeightSeq()
    parts = [s.strip() for s in text.split(",")]
    if any(":" in s for s in parts):
        pairs = []
        for pos, s in enumerate(parts):
            idx, sep, val = s.partition(":")
            if not sep or not idx.strip().isdigit():
                raise ParseError(f"malformed index:value pair {s!r}", position=pos)
            try:
                pairs.append((int(idx), parse_rational(val)))
            except ParseError as exc:
                raise ParseError(str(exc.args[0]), position=pos) from None
        return WeightSeq(pairs)
    vals = []
    for pos, s in enumerate(parts):
        try:
            vals.append(parse_rational(s))
        except ParseError:
            raise ParseError(f"malformed rational {s!r}", position=pos) from None
    return WeightSeq.dense(vals)


def format_weights(w: WeightSeq) -> str:
    return ",".join(f"{i}:{format_rational(v)}" for i, v in w.entries)


# -- polynomial text / JSON formats -----------------------------------------

def parse_poly_text(line: str) -> Poly:
    """Whitespace-separated rationals, low degree first: ``"1 3 1"`` is 1+3z+z^2."""
    coeffs = []
    for pos, m in enumerate(re.finditer(r"\S+", line)):
        try:
            coeffs.append(parse_rational(m.group()))
        except ParseError:
            raise ParseError(f"malformed rational {m.group()!r}", position=pos, offset=m.start()) from None
    return Poly(coeffs)


def parse_poly_json(text: str | Mapping) -> Poly:
    if isinstance(text, str):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", offset=exc.pos) from None
    else:
        obj = text
    if not isinstance(obj, Mapping) or not isinstance(obj.get("coeffs"), list):
        raise ParseError('expected an object with a "coeffs" array')
    coeffs = []
    for pos, c in enumerate(obj["coeffs"]):
        if isinstance(c, bool) or not isinstance(c, (str, int)):
            raise ParseError(f"coefficient must be a string rational, got {c!r}", position=pos)
        try:
            coeffs.append(parse_rational(str(c)))
        except ParseError:
            raise ParseError(f"malformed rational {c!r}", position=pos) from None
    return Poly(coeffs)


def parse_poly(text: str) -> Poly:
    """Dispatch on content: JSON object if it starts with ``{``, else text line(s)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return parse_poly_json(stripped)
    return parse_poly_text(" ".join(stripped.splitlines()))


def _fmt_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly_text(p: Poly) -> str:
    """Inverse of :func:`parse_poly_text`; the zero polynomial prints as ``0``."""
    return " ".join(_fmt_text(c) for c in p.coeffs) if p.coeffs else "0"


def poly_to_json(p: Poly) -> dict:
    return {"coeffs": [format_rational(c) for c in p.coeffs]}
