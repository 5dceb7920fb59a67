"""Symmetric-function evaluation and identity checking.

Evaluations are exact over the rationals (or Gaussian rationals).  Identities
are checked either at seeded random rational points, or by expanding both
sides into sparse multivariate polynomials ``{exponent tuple: coefficient}``
and comparing the maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional, Sequence

from .polycore import Poly, WeightSeq, format_rational
from .rng import SplitMix64, derive
from .rootcert import aberth
from .transforms import gamma_from_mu

MPoly = dict  # exponent tuple -> Fraction

NOT_FOUND = None


@dataclass(frozen=True)
class GaussQ:
    """Exact complex rational ``re + i*im``."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def _lift(self, o):
        return o if isinstance(o, GaussQ) else GaussQ(o)

    def __add__(self, o):
        o = self._lift(o)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return self._lift(o) - self

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __mul__(self, o):
        o = self._lift(o)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        d = o.re * o.re + o.im * o.im
        if not d:
            raise ZeroDivisionError("division by zero")
        return GaussQ((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.im == 0 and self.re == o
        return isinstance(o, GaussQ) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))


class Identity(str, Enum):
    EL_EXP = "el-exp"
    PRODFORM = "prodform"
    PRODFORM2 = "prodform2"
    BEAUTY = "beauty"
    JACOBI = "jacobi"


class Mode(str, Enum):
    FULL_EXPANSION = "full"
    RANDOM_EVAL = "random"


FULL_EXPANSION_MAX_N = 8


@dataclass
class IdentityReport:
    identity: Identity
    n: int
    mode: Mode
    trials: int
    verdict: bool
    counterexample: Optional[list] = None
    lhs: object = None
    rhs: object = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return format_rational(v)
            if isinstance(v, GaussQ):
                return [format_rational(v.re), format_rational(v.im)]
            return v

        return {
            "identity": self.identity.value,
            "n": self.n,
            "mode": self.mode.value,
            "trials": self.trials,
            "verdict": self.verdict,
            "counterexample": None if self.counterexample is None else [enc(x) for x in self.counterexample],
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
        }


# -- evaluation -------------------------------------------------------------

def elem_sym_all(pts: Sequence) -> list:
    """[e_0, ..., e_n] by expanding prod (1 + z_i t)."""
    e = [Fraction(1)]
    for z in pts:
        e = [e[0]] + [e[k] + z * e[k - 1] for k in range(1, len(e))] + [z * e[-1]]
    return e


def elem_sym(k: int, pts: Sequence):
    if k < 0 or k > len(pts):
        return Fraction(0)
    return elem_sym_all(pts)[k]


def sigma_k_r(k: int, r: int, pts: Sequence):
    """Sum of z^alpha over alpha in {0,1,2}^n with |alpha| = k and exactly r twos.

    Variable-by-variable transfer over (degree, twos) states.
    """
    if k < 0 or r < 0 or 2 * r > k:
        return Fraction(0)
    # dp[s][t]
    dp = [[Fraction(0)] * (r + 1) for _ in range(k + 1)]
    dp[0][0] = Fraction(1)
    for z in pts:
        z2 = z * z
        nxt = [row[:] for row in dp]
        for s in range(k + 1):
            for t in range(r + 1):
                v = dp[s][t]
                if not v:
                    continue
                if s + 1 <= k:
                    nxt[s + 1][t] = nxt[s + 1][t] + v * z
                if s + 2 <= k and t + 1 <= r:
                    nxt[s + 2][t + 1] = nxt[s + 2][t + 1] + v * z2
        dp = nxt
    return dp[k][r]


def w_mu_n_eval(mu: WeightSeq, pts: Sequence):
    """sum over i <= j of mu_{j-i} e_i e_j."""
    e = elem_sym_all(pts)
    n = len(pts)
    total = Fraction(0)
    for d, w in mu.entries:
        for i in range(n - d + 1):
            total = total + w * e[i] * e[i + d]
    return total


def el_exp_rhs(mu: WeightSeq, pts: Sequence):
    """e_n(z) * sum_k gamma_k e_{n-k}(z + 1/z)."""
    n = len(pts)
    g = gamma_from_mu(mu, n).upto(n)
    w = [z + 1 / z for z in pts]
    ew = elem_sym_all(w)
    en = elem_sym_all(pts)[n]
    return en * sum((g[k] * ew[n - k] for k in range(n + 1)), Fraction(0))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def beauty_sides(pts: Sequence):
    n = len(pts)
    e = elem_sym_all(pts)
    get = lambda k: e[k] if 0 <= k <= n else 0
    lhs = sum((get(k) * get(k) - get(k - 1) * get(k + 1) for k in range(n + 1)), Fraction(0))
    ew = elem_sym_all([z + 1 / z for z in pts])
    rhs = e[n] * sum((catalan(k) * ew[n - 2 * k] for k in range(n // 2 + 1)), Fraction(0))
    return lhs, rhs


def _prodform_pairs(n: int):
    return [(i, j) for i in range(n + 1) for j in range(n + 1)]


def _prodform_rhs_eval(i, j, sig):
    return sum((comb(i + j - 2 * r, i - r) * sig(i + j, r) for r in range(min(i, j) + 1)), Fraction(0))


def _prodform2_triples(n: int):
    return [(i, m) for i in range(n + 1) for m in range(n + 1 - i)]


def _prodform2_rhs_eval(i, m, sig):
    return sum((comb(2 * j + m, j) * sig(m + 2 * i, i - j) for j in range(i + 1)), Fraction(0))


# -- multivariate expansion -------------------------------------------------

def mp_add(a: MPoly, b: MPoly, scale=1) -> MPoly:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def mp_mul(a: MPoly, b: MPoly) -> MPoly:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, 0) + va * vb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _elem_mpoly(k: int, n: int) -> tuple:
    if k < 0 or k > n:
        return ()
    return tuple((tuple(1 if i in S else 0 for i in range(n)), Fraction(1)) for S in itertools.combinations(range(n), k))


def elem_mpoly(k: int, n: int) -> MPoly:
    return dict(_elem_mpoly(k, n))


@lru_cache(maxsize=None)
def _sigma_table(n: int) -> dict:
    table: dict = {}
    for alpha in itertools.product((0, 1, 2), repeat=n):
        key = (sum(alpha), alpha.count(2))
        table.setdefault(key, {})[alpha] = Fraction(1)
    return table


def sigma_mpoly(k: int, r: int, n: int) -> MPoly:
    return dict(_sigma_table(n).get((k, r), {}))


@lru_cache(maxsize=None)
def _ee_product(i: int, j: int, n: int) -> tuple:
    return tuple(mp_mul(elem_mpoly(i, n), elem_mpoly(j, n)).items())


def ee_mpoly(i: int, j: int, n: int) -> MPoly:
    return dict(_ee_product(min(i, j), max(i, j), n))


@lru_cache(maxsize=None)
def _joukowski_basis(k: int, n: int) -> tuple:
    """e_n(z) e_{n-k}(z + 1/z) = sum_{|S|=n-k} prod_{S}(1 + z_i^2) prod_{not S} z_i."""
    out: dict = {}
    for S in itertools.combinations(range(n), n - k):
        inS = set(S)
        # each i in S contributes exponent 0 or 2, each i outside contributes 1
        choices = [(0, 2) if i in inS else (1,) for i in range(n)]
        for alpha in itertools.product(*choices):
            out[alpha] = out.get(alpha, 0) + 1
    return tuple((a, Fraction(v)) for a, v in out.items())


@lru_cache(maxsize=None)
def _w_basis(d: int, n: int) -> tuple:
    """sum_i e_i e_{i+d}, the coefficient of mu_d in W_{mu,n}."""
    out: dict = {}
    for i in range(n - d + 1):
        out = mp_add(out, ee_mpoly(i, i + d, n))
    return tuple(out.items())


def w_mu_n_mpoly(mu: WeightSeq, n: int) -> MPoly:
    out: dict = {}
    for d, w in mu.entries:
        if d <= n:
            out = mp_add(out, dict(_w_basis(d, n)), w)
    return out


def el_exp_rhs_mpoly(mu: WeightSeq, n: int) -> MPoly:
    g = gamma_from_mu(mu, n).upto(n)
    out: dict = {}
    for k in range(n + 1):
        if g[k]:
            out = mp_add(out, dict(_joukowski_basis(k, n)), g[k])
    return out


def _first_diff(a: MPoly, b: MPoly):
    for k in sorted(set(a) | set(b)):
        if a.get(k, 0) != b.get(k, 0):
            return k, a.get(k, Fraction(0)), b.get(k, Fraction(0))
    return None


# -- verification -----------------------------------------------------------

def _random_point(rng: SplitMix64, n: int) -> list[Fraction]:
    return [rng.rational(-20, 20, 20, nonzero=True) for _ in range(n)]


def _sides_at(which: Identity, mu, pts):
    """Yield (lhs, rhs) pairs that must agree at ``pts``."""
    n = len(pts)
    if which is Identity.EL_EXP:
        yield w_mu_n_eval(mu, pts), el_exp_rhs(mu, pts)
    elif which is Identity.BEAUTY:
        yield beauty_sides(pts)
    elif which is Identity.PRODFORM:
        e = elem_sym_all(pts)
        sig = lru_cache(maxsize=None)(lambda k, r: sigma_k_r(k, r, pts))
        for i, j in _prodform_pairs(n):
            yield e[i] * e[j], _prodform_rhs_eval(i, j, sig)
    elif which is Identity.PRODFORM2:
        e = elem_sym_all(pts)
        sig = lru_cache(maxsize=None)(lambda k, r: sigma_k_r(k, r, pts))
        for i, m in _prodform2_triples(n):
            yield e[i] * e[i + m], _prodform2_rhs_eval(i, m, sig)


def _full_pairs(which: Identity, mu, n: int):
    if which is Identity.EL_EXP:
        yield "W", w_mu_n_mpoly(mu, n), el_exp_rhs_mpoly(mu, n)
    elif which is Identity.BEAUTY:
        lhs: dict = {}
        for k in range(n + 1):
            lhs = mp_add(lhs, ee_mpoly(k, k, n))
            if 1 <= k <= n - 1:
                lhs = mp_add(lhs, ee_mpoly(k - 1, k + 1, n), -1)
        rhs: dict = {}
        for k in range(n // 2 + 1):
            rhs = mp_add(rhs, dict(_joukowski_basis(2 * k, n)), catalan(k))
        yield "beauty", lhs, rhs
    elif which is Identity.PRODFORM:
        for i, j in _prodform_pairs(n):
            rhs: dict = {}
            for r in range(min(i, j) + 1):
                rhs = mp_add(rhs, sigma_mpoly(i + j, r, n), comb(i + j - 2 * r, i - r))
            yield f"e{i}*e{j}", ee_mpoly(i, j, n), rhs
    elif which is Identity.PRODFORM2:
        for i, m in _prodform2_triples(n):
            rhs: dict = {}
            for j in range(i + 1):
                rhs = mp_add(rhs, sigma_mpoly(m + 2 * i, i - j, n), comb(2 * j + m, j))
            yield f"e{i}*e{i + m}", ee_mpoly(i, i + m, n), rhs


def verify_identity(which: Identity | str, mu: Optional[WeightSeq], n: int,
                    mode: Mode | str = Mode.RANDOM_EVAL, trials: int = 50, seed: int = 0) -> IdentityReport:
    """Check one of the symmetric-function identities in ``n`` variables.

    Random points have numerators in [-20, 20] without 0 and denominators in
    [1, 20]; trial ``t`` draws from ``derive(seed, t)``, so a report is a pure
    function of its arguments.
    """
    which = Identity(which)
    mode = Mode(mode)
    if which is Identity.JACOBI:
        return jacobi_identity_check(n)
    if which is Identity.EL_EXP and mu is None:
        raise ValueError("el-exp needs a weight sequence mu")
    if n < 0:
        raise ValueError("n must be non-negative")
    if mode is Mode.FULL_EXPANSION:
        if n > FULL_EXPANSION_MAX_N:
            raise ValueError(f"full expansion is limited to n <= {FULL_EXPANSION_MAX_N}")
        for label, lhs, rhs in _full_pairs(which, mu, n):
            diff = _first_diff(lhs, rhs)
            if diff is not None:
                mono, a, b = diff
                return IdentityReport(which, n, mode, 0, False, list(mono), a, b, {"term": label})
        return IdentityReport(which, n, mode, 0, True)
    for t in range(trials):
        pts = _random_point(SplitMix64(derive(seed, t)), n)
        for lhs, rhs in _sides_at(which, mu, pts):
            if lhs != rhs:
                return IdentityReport(which, n, mode, t + 1, False, pts, lhs, rhs)
    return IdentityReport(which, n, mode, trials, True)


def jacobi_identity_check(n: int) -> IdentityReport:
    """sum_k C_k C(n, 2k) z^k (1+z)^(n-2k) against the Narayana coefficients."""
    lhs = Poly()
    for k in range(n // 2 + 1):
        lhs = lhs + (Poly([1, 1]) ** (n - 2 * k)).shift_degree(k) * (catalan(k) * comb(n, 2 * k))
    rhs = Poly([Fraction(comb(n + 1, k) * comb(n + 1, k + 1), n + 1) for k in range(n + 1)])
    if lhs == rhs:
        return IdentityReport(Identity.JACOBI, n, Mode.FULL_EXPANSION, 0, True)
    k = next(i for i in range(max(len(lhs), len(rhs))) if lhs[i] != rhs[i])
    return IdentityReport(Identity.JACOBI, n, Mode.FULL_EXPANSION, 0, False, [k], lhs[k], rhs[k])


# -- Grace-Walsh-Szego witness ---------------------------------------------

@dataclass(frozen=True)
class Region:
    kind: str  # "right_half_plane" or "disk"
    center: complex = 0j
    radius: float = 0.0

    @classmethod
    def right_half_plane(cls) -> "Region":
        return cls("right_half_plane")

    @classmethod
    def disk(cls, center: complex, radius: float) -> "Region":
        return cls("disk", complex(center), float(radius))

    def contains(self, z: complex, slack: float = 0.0) -> bool:
        z = complex(z)
        if self.kind == "right_half_plane":
            return z.real > -slack
        return abs(z - self.center) < self.radius + slack


def gws_witness(f_elem_coeffs: Sequence, pts: Sequence, region: Region, slack: float = 1e-9):
    """A diagonal point zeta in ``region`` with f(zeta, ..., zeta) = f(pts), or ``NOT_FOUND``.

    ``f = sum_k c_k e_k`` is given by its e-expansion; f(pts) is exact, only
    the final univariate solve is floating point.
    """
    n = len(pts)
    pts = [p if isinstance(p, GaussQ) else GaussQ(p) for p in pts]
    if not all(region.contains(complex(p)) for p in pts):
        raise ValueError("points must lie in the region")
    c = [Fraction(x) for x in f_elem_coeffs] + [Fraction(0)] * (n + 1 - len(f_elem_coeffs))
    if len(c) > n + 1:
        raise ValueError("more e_k coefficients than variables allow")
    e = elem_sym_all(pts)
    v = sum((c[k] * e[k] for k in range(n + 1)), GaussQ(0))
    uni = [c[k] * comb(n, k) for k in range(n + 1)]
    shifted0 = GaussQ(uni[0]) - v
    top = max((k for k in range(1, n + 1) if uni[k]), default=0)
    if top == 0:
        return complex(pts[0]) if shifted0 == 0 and pts else NOT_FOUND
    coeffs = [complex(shifted0)] + [complex(float(u)) for u in uni[1:top + 1]]
    roots = aberth(coeffs).roots
    inside = [r for r in roots if region.contains(r, slack)]
    if not inside:
        return NOT_FOUND
    return inside[0]
