"""Certification of zero locations.

Exact side: Sturm chains over primitive integer polynomials decide real-root
counts, square-free decomposition gives multiplicities, and the
Hermite-Biehler criterion decides weak Hurwitz stability.  Numeric side: an
Aberth-Ehrlich iteration locates complex zeros for the sector experiments.

Sign variations are counted with zeros dropped, so for square-free ``p`` the
count ``V(lo) - V(hi)`` is the number of distinct roots in ``(lo, hi]`` even
when an endpoint is itself a root; no endpoint perturbation is needed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .polycore import (
    Poly,
    even_odd_split,
    format_rational,
    int_prem,
    int_sign_at,
    poly_gcd,
    square_free_decomposition,
    square_free_part,
    to_primitive_int,
    _primitive,
)

Bound = Optional[Fraction]  # None stands for -inf / +inf depending on side


class Verdict(str, Enum):
    REAL_ROOTED = "REAL_ROOTED"
    IN_P_PLUS = "IN_P_PLUS"
    WEAKLY_HURWITZ = "WEAKLY_HURWITZ"
    IDENTICALLY_ZERO = "IDENTICALLY_ZERO"
    FAIL = "FAIL"


@dataclass(frozen=True)
class IsolationInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def to_json(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi), "mult": self.multiplicity}

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclass
class ZeroCertificate:
    verdict: Verdict
    degree: int
    distinct_real_roots: int = 0
    isolation: list[IsolationInterval] = field(default_factory=list)
    fail_reason: Optional[str] = None
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_json(self) -> dict:
        # field order is part of the published schema
        return {
            "verdict": self.verdict.value,
            "degree": self.degree,
            "distinct_real_roots": self.distinct_real_roots,
            "isolation": [iv.to_json() for iv in self.isolation],
            "fail_reason": self.fail_reason,
        }


@dataclass(frozen=True)
class ComplexRootSet:
    roots: list[complex]
    residual_bound: float
    iterations: int
    converged: bool = True

    def real_roots(self, tol: float = 1e-9) -> list[float]:
        return sorted(r.real for r in self.roots if abs(r.imag) <= tol)


# -- Sturm machinery --------------------------------------------------------

class SturmChain:
    """Sturm chain of the square-free part of a polynomial, in integer form."""

    def __init__(self, p: Poly):
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        f = to_primitive_int(square_free_part(p))
        chain = [f]
        if len(f) > 1:
            df = _primitive([k * c for k, c in enumerate(f)][1:])
            chain.append(df)
            while len(chain[-1]) > 1:
                r = int_prem(chain[-2], chain[-1])
                if not r:
                    break
                chain.append(_primitive([-x for x in r]))
        self.chain = chain

    @property
    def degree(self) -> int:
        return len(self.chain[0]) - 1

    def variations(self, x: Bound, side: int = 1) -> int:
        """Sign variations at ``x``; ``x=None`` means ``side * infinity``."""
        signs = []
        for a in self.chain:
            if x is None:
                s = 1 if a[-1] > 0 else -1
                if side < 0 and (len(a) - 1) % 2:
                    s = -s
            else:
                s = int_sign_at(a, x)
            if s:
                signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def count(self, lo: Bound, hi: Bound) -> int:
        """Distinct real roots in ``(lo, hi]``."""
        return self.variations(lo, -1) - self.variations(hi, 1)


def count_real_roots(p: Poly, lo: Bound = None, hi: Bound = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]`` (``None`` = infinite)."""
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("empty interval")
    return SturmChain(p).count(_frac(lo), _frac(hi))


def _frac(x):
    return None if x is None else Fraction(x)


def root_bound(p: Poly) -> Fraction:
    """Power of two strictly exceeding every |root| (Cauchy bound)."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    cauchy = 1 + m / lc
    b = Fraction(1)
    while b <= cauchy:
        b *= 2
    return b


def _isolate_chain(sc: SturmChain, f: list[int], lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolate roots in (lo, hi) where lo, hi are not roots; returns closed intervals."""
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, sc.count(lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        if int_sign_at(f, m) == 0:
            # exact rational root: record it and carve a root-free gap around it
            out.append((m, m))
            eps = (b - a) / 4
            while True:
                l, r = m - eps, m + eps
                if int_sign_at(f, l) and int_sign_at(f, r) and sc.count(l, r) == 1:
                    break
                eps /= 2
            stack.append((a, l, sc.count(a, l)))
            stack.append((r, b, sc.count(r, b)))
        else:
            stack.append((a, m, sc.count(a, m)))
            stack.append((m, b, sc.count(m, b)))
    out.sort()
    return _separate(sc, f, out)


def _separate(sc: SturmChain, f: list[int], ivs: list[tuple[Fraction, Fraction]]):
    """Shrink intervals until no two closed intervals touch."""
    ivs = list(ivs)
    for i in range(len(ivs) - 1):
        a, b = ivs[i]
        c, d = ivs[i + 1]
        while b >= c:
            if a < b:
                a, b = _shrink(sc, f, a, b)
            if b >= c and c < d:
                c, d = _shrink(sc, f, c, d)
            ivs[i], ivs[i + 1] = (a, b), (c, d)
    return ivs


def _shrink(sc, f, a, b):
    m = (a + b) / 2
    if int_sign_at(f, m) == 0:
        return m, m
    return (a, m) if sc.count(a, m) == 1 else (m, b)


def isolate_roots(p: Poly) -> list[IsolationInterval]:
    """Disjoint sorted rational intervals, one per distinct real root, with multiplicities."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree == 0:
        return []
    sc = SturmChain(p)
    f = sc.chain[0]
    B = root_bound(p)
    raw = _isolate_chain(sc, f, -B, B)
    factors = [(SturmChain(g), to_primitive_int(g), m) for g, m in square_free_decomposition(p)]
    out = []
    for lo, hi in raw:
        mult = 1
        for gsc, gi, m in factors:
            if lo == hi:
                hit = int_sign_at(gi, lo) == 0
            else:
                hit = gsc.count(lo, hi) == 1
            if hit:
                mult = m
                break
        out.append(IsolationInterval(lo, hi, mult))
    return out


def refine_interval(p: Poly, iv: IsolationInterval, width: Fraction) -> IsolationInterval:
    """Sturm-guided bisection of one isolating interval down to ``width``."""
    if iv.lo == iv.hi:
        return iv
    sc = SturmChain(p)
    f = sc.chain[0]
    a, b = iv.lo, iv.hi
    while b - a > width:
        a, b = _shrink(sc, f, a, b)
        if a == b:
            break
    return IsolationInterval(a, b, iv.multiplicity)


# -- certificates -----------------------------------------------------------

def is_real_rooted(p: Poly, isolate: bool = True) -> ZeroCertificate:
    """REAL_ROOTED iff every square-free factor has as many distinct real roots as its degree."""
    if p.is_zero():
        raise ValueError("zero polynomial: branch to IDENTICALLY_ZERO")
    n = p.degree
    if n == 0:
        return ZeroCertificate(Verdict.REAL_ROOTED, 0)
    factors = square_free_decomposition(p)
    counts = []
    for g, m in factors:
        c = SturmChain(g).count(None, None)
        counts.append({"degree": g.degree, "multiplicity": m, "real": c})
        if c < g.degree:
            distinct = count_real_roots(p)
            return ZeroCertificate(
                Verdict.FAIL, n, distinct,
                isolate_roots(p) if isolate else [],
                f"sturm count {c} < degree {g.degree} of square-free factor with multiplicity {m}",
                {"factors": counts},
            )
    distinct = sum(d["real"] for d in counts)
    return ZeroCertificate(
        Verdict.REAL_ROOTED, n, distinct,
        isolate_roots(p) if isolate else [],
        None, {"factors": counts},
    )


def is_in_p_plus(p: Poly, n: Optional[int] = None, isolate: bool = True) -> ZeroCertificate:
    """Membership in P+_n: degree <= n, real-rooted, no zero in (0, +inf).

    A zero at the origin is allowed; ``witness["zero_at_origin"]`` flags it
    for callers that need strictly negative zeros.
    """
    if p.is_zero():
        return ZeroCertificate(Verdict.IDENTICALLY_ZERO, -1)
    d = p.degree
    if n is None:
        n = d
    if d > n:
        return ZeroCertificate(Verdict.FAIL, d, fail_reason=f"degree {d} exceeds {n}")
    cert = is_real_rooted(p, isolate=isolate)
    zero_at_origin = not p.coeffs[0]
    cert.witness["zero_at_origin"] = zero_at_origin
    if not cert.passed:
        cert.fail_reason = "not real-rooted: " + cert.fail_reason
        return cert
    pos = SturmChain(p).count(Fraction(0), None) if d else 0
    cert.witness["positive_roots"] = pos
    if pos:
        cert.verdict = Verdict.FAIL
        cert.fail_reason = f"{pos} root(s) in (0, +inf)"
        return cert
    cert.verdict = Verdict.IN_P_PLUS
    return cert


def in_p_plus_or_zero(p: Poly, n: Optional[int] = None) -> bool:
    return is_in_p_plus(p, n, isolate=False).passed


def interlace_check(pe: Poly, po: Poly) -> bool:
    """Weak interlacing of the zeros of two real-rooted polynomials with non-positive zeros.

    Ordering zeros decreasingly, the even part must lead:
    ``z'_1 >= z_1 >= z'_2 >= z_2 >= ...`` (``z'`` zeros of ``pe``, ``z`` of
    ``po``).  Common zeros are stripped first; they never break weak
    inequalities.  The coprime remainders must then alternate strictly.
    """
    if pe.is_zero() or po.is_zero():
        raise ValueError("interlace_check needs nonzero polynomials")
    for q in (pe, po):
        if not is_in_p_plus(q, isolate=False).passed:
            raise ValueError("interlace_check needs polynomials with only real non-positive zeros")
    g = poly_gcd(pe, po)
    e, o = pe // g, po // g
    if e.degree > 0 and square_free_part(e).degree < e.degree:
        return False
    if o.degree > 0 and square_free_part(o).degree < o.degree:
        return False
    h = e * o
    if h.degree <= 0:
        return True
    sce = SturmChain(e) if e.degree > 0 else None
    ei = to_primitive_int(e)
    owners = []
    for iv in isolate_roots(h):
        if sce is None:
            owners.append("O")
        elif iv.lo == iv.hi:
            owners.append("E" if int_sign_at(ei, iv.lo) == 0 else "O")
        else:
            owners.append("E" if sce.count(iv.lo, iv.hi) == 1 else "O")
    owners.reverse()  # decreasing order
    return all(c == ("E" if i % 2 == 0 else "O") for i, c in enumerate(owners))


def is_weakly_hurwitz(p: Poly) -> ZeroCertificate:
    """Hermite-Biehler decision of non-vanishing on the open right half-plane."""
    if p.is_zero():
        return ZeroCertificate(Verdict.IDENTICALLY_ZERO, -1)
    d = p.degree
    signs = {c > 0 for c in p.coeffs if c}
    if len(signs) > 1:
        return ZeroCertificate(Verdict.FAIL, d, fail_reason="nonzero coefficients of mixed sign")
    pe, po = even_odd_split(p)
    witness = {"even": [format_rational(c) for c in pe.coeffs], "odd": [format_rational(c) for c in po.coeffs]}
    if pe.is_zero() or po.is_zero():
        part, name = (po, "odd") if pe.is_zero() else (pe, "even")
        c = is_in_p_plus(part, isolate=False)
        if not c.passed:
            return ZeroCertificate(Verdict.FAIL, d, fail_reason=f"{name} part not in P+: {c.fail_reason}", witness=witness)
        witness["case"] = "odd-only" if pe.is_zero() else "even-only"
        return ZeroCertificate(Verdict.WEAKLY_HURWITZ, d, witness=witness)
    for part, name in ((pe, "even"), (po, "odd")):
        c = is_in_p_plus(part, isolate=False)
        if not c.passed:
            return ZeroCertificate(Verdict.FAIL, d, fail_reason=f"{name} part not in P+: {c.fail_reason}", witness=witness)
    if not interlace_check(pe, po):
        return ZeroCertificate(Verdict.FAIL, d, fail_reason="zeros of even and odd parts do not interlace", witness=witness)
    witness["case"] = "interlacing"
    return ZeroCertificate(Verdict.WEAKLY_HURWITZ, d, witness=witness)


# -- numeric roots ----------------------------------------------------------

def _float_coeffs(p: Poly) -> list[float]:
    scale = max(abs(c) for c in p.coeffs)
    return [float(c / scale) for c in p.coeffs]


def aberth(coeffs: Sequence[complex], tol: float = 1e-14, max_iter: int = 1000) -> ComplexRootSet:
    """Simultaneous Aberth-Ehrlich iteration on complex float coefficients (low degree first).

    Exact zero roots (vanishing trailing coefficients) are split off first.
    """
    cs = [complex(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) < 2:
        raise ValueError("need degree >= 1")
    zeros = 0
    while cs[0] == 0:
        cs.pop(0)
        zeros += 1
    n = len(cs) - 1
    if n == 0:
        return ComplexRootSet([0j] * zeros, 0.0, 0)
    lead = cs[-1]
    mon = [c / lead for c in cs]
    dcs = [k * c for k, c in enumerate(mon)][1:]
    # Fujiwara-style radius, initial guesses on a rotated circle
    radius = 2 * max(abs(mon[k]) ** (1.0 / (n - k)) for k in range(n))
    radius = max(radius, 1e-300)
    rmin = min(abs(mon[0]) ** (1.0 / n), radius)
    r0 = math.sqrt(radius * rmin) if rmin > 0 else radius / 2
    z = [r0 * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]

    def horner(cl, x):
        acc = 0j
        for c in reversed(cl):
            acc = acc * x + c
        return acc

    it = 0
    converged = False
    for it in range(1, max_iter + 1):
        biggest = 0.0
        for k in range(n):
            zk = z[k]
            pv = horner(mon, zk)
            if pv == 0:
                continue
            dv = horner(dcs, zk)
            ratio = pv / dv if dv != 0 else complex(1e-3 * (1 + abs(zk)))
            s = 0j
            for j in range(n):
                if j != k:
                    diff = zk - z[j]
                    s += 1 / diff if diff != 0 else 0
            denom = 1 - ratio * s
            corr = ratio / denom if denom != 0 else ratio
            z[k] = zk - corr
            biggest = max(biggest, abs(corr) / max(1.0, abs(z[k])))
        if biggest < tol:
            converged = True
            break
    resid = 0.0
    absm = [abs(c) for c in mon]
    for zk in z:
        scale = sum(a * abs(zk) ** k for k, a in enumerate(absm))
        resid = max(resid, abs(horner(mon, zk)) / scale if scale else 0.0)
    return ComplexRootSet([0j] * zeros + z, resid, it, converged)


def complex_roots_numeric(p: Poly, tol: float = 1e-14, max_iter: int = 1000) -> ComplexRootSet:
    """All complex zeros of an exact polynomial, as floats.

    ``residual_bound`` is the largest relative backward error
    ``|p(r)| / sum |a_k| |r|**k`` over the returned roots.  Clustered
    multiple roots are returned as the iteration leaves them.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    return aberth(_float_coeffs(p), tol, max_iter)


def sector_distance(r: complex) -> float:
    """Angular distance from ``r`` to the negative real axis, in [0, pi]."""
    return math.pi - abs(cmath.phase(r))


def sector_containment(roots: ComplexRootSet | Sequence[complex], theta: float, slack: float = 1e-9) -> bool:
    """Every root of modulus above ``slack`` lies in the sector of half-angle ``theta + slack`` about the negative axis."""
    if not 0 < theta <= math.pi:
        raise ValueError("theta must lie in (0, pi]")
    rs = roots.roots if isinstance(roots, ComplexRootSet) else roots
    return all(abs(r) <= slack or sector_distance(r) < theta + slack for r in rs)


def szasz_bound(p: Poly, z: complex) -> float:
    """Growth bound for polynomials without zeros in a half-plane through the origin."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    M = p.low_order()
    bM = abs(p[M])
    b1 = abs(p[M + 1]) / bM
    b2 = abs(p[M + 2]) / bM
    az = abs(z)
    expo = float(b1) * az + 3 * az * az * float(b1 * b1) + 3 * az * az * float(b2)
    try:
        growth = math.exp(expo)
    except OverflowError:
        return math.inf
    return float(bM) * az ** M * growth
