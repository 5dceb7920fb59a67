"""Non-linear coefficient transformations and their test polynomials.

Sequences are carried as :class:`Poly` (a finite coefficient list) and
weights as :class:`WeightSeq`.  Reads outside ``0..n`` return zero, so every
operator below is defined on finite sequences without boundary cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .polycore import Poly, WeightSeq
from .rootcert import in_p_plus_or_zero

__all__ = [
    "Kind", "TransformSpec", "IterationReport",
    "op_L", "op_U_alpha", "op_V_alpha", "op_T_mu", "op_S_r", "op_S_r_prime",
    "gamma_from_mu", "mu_from_gamma", "p_mu_n", "clear_joukowski",
    "algU_condition_poly", "algV_condition_poly", "jensen_poly",
    "sr_exp_coeff", "turan_shift", "turan_shift_seq", "apply_transform", "iterate_transform",
    "binomial_poly", "odd_even_weights",
]


class Kind(str, Enum):
    L = "L"
    U_ALPHA = "U"
    V_ALPHA = "V"
    T_MU = "T"
    S_R = "Sr"
    S_R_PRIME = "Sr-prime"
    TURAN_SHIFT = "turan"


@dataclass(frozen=True)
class TransformSpec:
    kind: Kind
    weights: Optional[WeightSeq] = None
    r: Optional[int] = None

    def __post_init__(self):
        needs_w = self.kind in (Kind.U_ALPHA, Kind.V_ALPHA, Kind.T_MU)
        needs_r = self.kind in (Kind.S_R, Kind.S_R_PRIME)
        if needs_w != (self.weights is not None):
            raise ValueError(f"{self.kind.value}: weights {'required' if needs_w else 'not accepted'}")
        if needs_r != (self.r is not None):
            raise ValueError(f"{self.kind.value}: r {'required' if needs_r else 'not accepted'}")
        if needs_r and self.r < 0:
            raise ValueError("r must be non-negative")


@dataclass
class IterationReport:
    depth_requested: int
    depth_achieved: int
    first_negative: Optional[tuple[int, int, Fraction]] = None
    failure: Optional[str] = None
    sequences: list[Poly] = field(default_factory=list)

    def to_json(self) -> dict:
        fn = None
        if self.first_negative is not None:
            it, idx, val = self.first_negative
            fn = {"iteration": it, "index": idx, "value": f"{val.numerator}/{val.denominator}"}
        return {
            "depth_requested": self.depth_requested,
            "depth_achieved": self.depth_achieved,
            "first_negative": fn,
            "failure": self.failure,
        }


def binomial_poly(n: int) -> Poly:
    """(1+z)**n with exact binomial coefficients."""
    return Poly([comb(n, k) for k in range(n + 1)])


def op_L(a: Poly) -> Poly:
    """b_k = a_k**2 - a_{k-1} a_{k+1}."""
    c = a.coeffs
    n = len(c)
    out = []
    for k in range(n):
        v = c[k] * c[k]
        if 0 < k < n - 1:
            v -= c[k - 1] * c[k + 1]
        out.append(v)
    return Poly._trusted(out)


def op_U_alpha(a: Poly, alpha: WeightSeq) -> Poly:
    """b_k = sum_j alpha_j a_{k-j} a_{k+j}; output indices 0..n."""
    c = a.coeffs
    n = len(c)
    out = [Fraction(0)] * n
    for j, w in alpha.entries:
        for k in range(j, n - j):
            out[k] += w * c[k - j] * c[k + j]
    return Poly._trusted(out)


def op_V_alpha(a: Poly, alpha: WeightSeq) -> Poly:
    """c_k = sum_j alpha_j a_{k-j} a_{k+1+j}; the index-n entry reads a_{n+1} = 0."""
    c = a.coeffs
    n = len(c)
    out = [Fraction(0)] * n
    for j, w in alpha.entries:
        for k in range(j, n - 1 - j):
            out[k] += w * c[k - j] * c[k + 1 + j]
    return Poly._trusted(out)


def op_T_mu(a: Poly, mu: WeightSeq) -> Poly:
    """sum over i <= j of mu_{j-i} a_i a_j z**(i+j)."""
    c = a.coeffs
    n = len(c)
    if not n:
        return Poly()
    out = [Fraction(0)] * (2 * n - 1)
    for d, w in mu.entries:
        for i in range(n - d):
            out[2 * i + d] += w * c[i] * c[i + d]
    return Poly._trusted(out)


def _sr_alpha(r: int) -> WeightSeq:
    # alpha_0 = 1 and alpha_r = -1 collide at r = 0
    return WeightSeq({0: 0} if r == 0 else {0: 1, r: -1})


def op_S_r(a: Poly, r: int) -> Poly:
    """a_i**2 - a_{i-r} a_{i+r}; the zero map when r = 0."""
    return op_U_alpha(a, _sr_alpha(r))


def op_S_r_prime(a: Poly, r: int) -> Poly:
    return op_V_alpha(a, _sr_alpha(r))


def odd_even_weights(alpha: WeightSeq, odd: bool = False) -> WeightSeq:
    """mu = (alpha_0, 0, alpha_1, 0, ...) or, with ``odd``, (0, alpha_0, 0, alpha_1, ...)."""
    return WeightSeq({2 * j + int(odd): v for j, v in alpha.entries})


def gamma_from_mu(mu: WeightSeq, K: int) -> WeightSeq:
    """gamma_k = sum_{j <= k/2} C(k, j) mu_{k-2j} for 0 <= k <= K."""
    m = mu.upto(K)
    return WeightSeq.dense(
        sum((comb(k, j) * m[k - 2 * j] for j in range(k // 2 + 1)), Fraction(0))
        for k in range(K + 1)
    )


def mu_from_gamma(gamma: WeightSeq, K: int) -> WeightSeq:
    """Chebyshev inversion of :func:`gamma_from_mu`, with mu_0 = gamma_0."""
    g = gamma.upto(K)
    out = []
    for k in range(K + 1):
        if k == 0:
            out.append(g[0])
            continue
        s = Fraction(0)
        for j in range(k // 2 + 1):
            s += (-1) ** j * Fraction(k, k - j) * comb(k - j, j) * g[k - 2 * j]
        out.append(s)
    return WeightSeq.dense(out)


def p_mu_n(mu: WeightSeq, n: int) -> Poly:
    """sum_k gamma_k C(n, k) z**(n-k)."""
    g = gamma_from_mu(mu, n).upto(n)
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        out[n - k] = g[k] * comb(n, k)
    return Poly(out)


def clear_joukowski(p: Poly, n: int) -> Poly:
    """z**n * p(z + 1/z) for deg p <= n, as a polynomial."""
    if p.degree > n:
        raise ValueError("degree exceeds n")
    out = Poly()
    base = Poly([1, 0, 1])
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + (base ** k).shift_degree(n - k) * c
    return out


def algU_condition_poly(alpha: WeightSeq, n: int) -> Poly:
    """sum_k (sum_{j<=k} alpha_j / ((k+j)! (k-j)!)) z**k / (n-2k)!."""
    a = alpha.upto(n)
    out = []
    for k in range(n // 2 + 1):
        s = sum((Fraction(a[j], factorial(k + j) * factorial(k - j)) for j in range(k + 1)), Fraction(0))
        out.append(s / factorial(n - 2 * k))
    return Poly(out)


def algV_condition_poly(alpha: WeightSeq, n: int) -> Poly:
    """sum_k (sum_{j<=k} alpha_j / ((k+1+j)! (k-j)!)) z**k / (n-2k-1)!."""
    if n < 1:
        return Poly()
    a = alpha.upto(n)
    out = []
    for k in range((n - 1) // 2 + 1):
        s = sum((Fraction(a[j], factorial(k + 1 + j) * factorial(k - j)) for j in range(k + 1)), Fraction(0))
        out.append(s / factorial(n - 2 * k - 1))
    return Poly(out)


def jensen_poly(gamma: WeightSeq | Poly, n: int) -> Poly:
    """sum_{k<=n} C(n, k) gamma_k z**k."""
    get = gamma.__getitem__
    return Poly([comb(n, k) * get(k) for k in range(n + 1)])


def _rising(a: int, r: int) -> int:
    """a (a+1) ... (a+r-1)."""
    out = 1
    for i in range(r):
        out *= a + i
    return out


def _falling(a: int, r: int) -> int:
    """a (a-1) ... (a-r+1)."""
    out = 1
    for i in range(r):
        out *= a - i
    return out


def sr_exp_coeff(r: int, k: int, shifted: bool = False) -> Fraction:
    """Coefficient of z**k in S_r(e^z), or in S'_r(e^z) when ``shifted``."""
    if shifted:
        return Fraction(_rising(k + 2, r) - _falling(k, r), factorial(k) * factorial(k + 1 + r))
    return Fraction(_rising(k + 1, r) - _falling(k, r), factorial(k) * factorial(k + r))


def turan_shift_seq(g: list[Fraction]) -> list[Fraction]:
    """t_k = g_{k+1}**2 - g_k g_{k+2} on a dense list; one entry shorter."""
    n = len(g)
    return [g[k + 1] ** 2 - (g[k] * g[k + 2] if k + 2 < n else 0) for k in range(n - 1)]


def turan_shift(gamma: Poly) -> Poly:
    return Poly(turan_shift_seq(list(gamma.coeffs)))


def apply_transform(spec: TransformSpec, a: Poly) -> Poly:
    k = spec.kind
    if k is Kind.L:
        return op_L(a)
    if k is Kind.U_ALPHA:
        return op_U_alpha(a, spec.weights)
    if k is Kind.V_ALPHA:
        return op_V_alpha(a, spec.weights)
    if k is Kind.T_MU:
        return op_T_mu(a, spec.weights)
    if k is Kind.S_R:
        return op_S_r(a, spec.r)
    if k is Kind.S_R_PRIME:
        return op_S_r_prime(a, spec.r)
    return turan_shift(a)


def iterate_transform(spec: TransformSpec, a: Poly, depth: int = 10, check: str = "nonneg",
                      keep: bool = False) -> IterationReport:
    """Apply ``spec`` up to ``depth`` times, stopping at the first failed check.

    ``check="nonneg"`` stops at the first negative coefficient and records
    (iteration, index, value); ``check="in_p_plus"`` stops at the first
    iterate outside P+ (the zero polynomial passes).  Intermediate sequences
    are kept only with ``keep``; coefficient sizes roughly double per step.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if check not in ("nonneg", "in_p_plus"):
        raise ValueError(f"unknown check {check!r}")
    rep = IterationReport(depth, 0)
    cur = a
    for it in range(1, depth + 1):
        cur = apply_transform(spec, cur)
        if keep:
            rep.sequences.append(cur)
        if check == "nonneg":
            neg = next(((i, c) for i, c in enumerate(cur.coeffs) if c < 0), None)
            if neg is not None:
                rep.first_negative = (it, neg[0], neg[1])
                rep.failure = f"negative coefficient at iteration {it}"
                return rep
        elif not in_p_plus_or_zero(cur):
            rep.failure = f"iterate {it} not in P+"
            return rep
        rep.depth_achieved = it
    return rep
