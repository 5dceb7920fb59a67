"""Acceptance criteria as runnable checks, shared by ``selftest`` and the test suite.

Each criterion takes its sample sizes as keyword arguments so that the
self-test can run a reduced version.  Randomness is drawn from
``derive(seed, number)`` and nothing else, so results are reproducible.
Where a criterion compares against an oracle, the oracle is computed by a
route that shares no code with the implementation under test.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .conjectures import (
    boros_moll_row,
    check_conjecture,
    check_qr_relation,
    logconcavity_record,
    sector_experiment,
)
from .polycore import Poly, WeightSeq
from .rng import SplitMix64, derive
from .rootcert import (
    Verdict,
    complex_roots_numeric,
    in_p_plus_or_zero,
    is_in_p_plus,
    is_weakly_hurwitz,
    szasz_bound,
)
from .symfunc import Identity, Mode, verify_identity
from .transforms import (
    algU_condition_poly,
    algV_condition_poly,
    binomial_poly,
    clear_joukowski,
    gamma_from_mu,
    mu_from_gamma,
    op_L,
    op_S_r,
    op_S_r_prime,
    op_T_mu,
    op_U_alpha,
    op_V_alpha,
    p_mu_n,
    sr_exp_coeff,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    budget: float = math.inf

    @property
    def in_budget(self) -> bool:
        return self.seconds <= self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.in_budget

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        over = "" if self.in_budget else " over budget"
        return f"[{tag}] {self.number:2d} {self.title}: {self.detail} ({self.seconds:.2f}s of {self.budget:g}s{over})"


def _rng(seed: int, number: int) -> SplitMix64:
    return SplitMix64(derive(seed, number))


# -- generators -------------------------------------------------------------

def random_negative_rooted(rng: SplitMix64, max_degree: int = 12) -> Poly:
    """prod (1 + rho_i z) with rational rho_i in (0, 10]."""
    p = Poly([1])
    for _ in range(rng.randint(1, max_degree)):
        p = p * Poly([1, rng.rational(1, 100, 10)])
    return p


def random_mu(rng: SplitMix64, max_index: int = 6, max_support: int = 4) -> WeightSeq:
    return WeightSeq({rng.randint(0, max_index): rng.rational(-5, 5, 4, nonzero=True)
                      for _ in range(rng.randint(1, max_support))})


def random_alpha(rng: SplitMix64) -> WeightSeq:
    """Support <= 3 on indices 0..3, entries in [-3, 3].

    Negative tail entries are drawn often, since membership of the image
    flips once they outweigh alpha_0 by a small factor; uniform draws would
    land almost always on the P+ side.
    """
    out = {0: Fraction(rng.randint(1, 12), 4) if rng.random() < 0.85 else rng.rational(-3, 3, 3, nonzero=True)}
    for _ in range(rng.randint(0, 2)):
        j = rng.randint(1, 3)
        out[j] = -Fraction(rng.randint(1, 12), 4) if rng.random() < 0.7 else rng.rational(-3, 3, 3, nonzero=True)
    return WeightSeq(out)


def random_hurwitz_candidate(rng: SplitMix64, max_degree: int = 8) -> Poly:
    """A product of linear and quadratic factors, stable or (about half the time) not."""
    p = Poly([1])
    deg, zero_used = 0, False
    target = rng.randint(1, max_degree)
    unstable = rng.random() < 0.5
    while deg < target:
        kind = rng.below(4) if deg + 2 <= target else rng.below(2)
        if kind == 0:
            a = rng.rational(0, 10, 10)
            if a == 0:
                if zero_used:
                    a = Fraction(1)
                zero_used = True
            p, deg = p * Poly([a, 1]), deg + 1
        elif kind == 1:
            a = rng.rational(1, 10, 10)
            if unstable and rng.random() < 0.3:
                a = -a
            p, deg = p * Poly([a, 1]), deg + 1
        else:
            b, c = rng.rational(0, 10, 10), rng.rational(1, 10, 10)
            if unstable and rng.random() < 0.3:
                b = -rng.rational(1, 10, 10)
            p, deg = p * Poly([c, b, 1]), deg + 2
    return p * rng.choice([1, -1, Fraction(3, 2)])


def random_sector_poly(rng: SplitMix64, theta: float, max_degree: int = 8) -> Poly:
    """Monic product whose zeros lie strictly inside the sector of half-angle theta.

    Quadratic factors z^2 + b z + c have zeros at angle atan(sqrt(4c - b^2) / b)
    from the negative axis, so c is drawn below b^2 (1 + tan^2 theta) / 4.
    """
    t2 = Fraction(math.tan(theta) ** 2).limit_denominator(10 ** 6)
    p = Poly([1])
    deg = 0
    target = rng.randint(1, max_degree)
    while deg < target:
        if deg + 2 <= target and rng.random() < 0.6:
            b = rng.rational(1, 20, 10)
            lo, hi = b * b / 4, b * b * (1 + t2) / 4
            c = lo + (hi - lo) * Fraction(rng.randint(1, 99), 100) * Fraction(9, 10)
            p, deg = p * Poly([c, b, 1]), deg + 2
        else:
            p, deg = p * Poly([rng.rational(1, 20, 10), 1]), deg + 1
    return p


# -- oracles ----------------------------------------------------------------

def narayana_row(n: int) -> list[Fraction]:
    return [Fraction(comb(n + 1, k) * comb(n + 1, k + 1), n + 1) for k in range(n + 1)]


def boros_moll_oracle(m: int) -> list[Fraction]:
    """Expand 2^(-2m) sum_k 2^k C(2m-2k, m-k) C(m+k, m) (a+1)^k by polynomial arithmetic."""
    out = Poly()
    for k in range(m + 1):
        out = out + Poly([1, 1]) ** k * (2 ** k * comb(2 * m - 2 * k, m - k) * comb(m + k, m))
    return [c / 4 ** m for c in out.coeffs]


def boros_moll_recurrence_holds(m_max: int) -> bool:
    """2(m+1) d_l(m+1) = 2(m+l) d_{l-1}(m) + (4m+2l+3) d_l(m)."""
    rows = [boros_moll_row(m).d for m in range(m_max + 1)]
    get = lambda m, l: rows[m][l] if 0 <= l <= m else 0
    return all(
        2 * (m + 1) * get(m + 1, l) == 2 * (m + l) * get(m, l - 1) + (4 * m + 2 * l + 3) * get(m, l)
        for m in range(m_max) for l in range(m + 2)
    )


def sr_exp_coeff_oracle(r: int, k: int, shifted: bool) -> Fraction:
    """Apply S_r (or S'_r) to a long enough truncation of e^z and read off index k."""
    e = Poly([Fraction(1, factorial(j)) for j in range(k + r + 2)])
    return (op_S_r_prime(e, r) if shifted else op_S_r(e, r))[k]


def numeric_weakly_hurwitz(p: Poly, slack: float = 1e-9) -> bool:
    return all(r.real <= slack for r in complex_roots_numeric(p).roots)


# -- criteria ---------------------------------------------------------------

def c01_conjecture1(seed: int = 0, trials: int = 1000) -> tuple[bool, str]:
    rng = _rng(seed, 1)
    bad = 0
    for _ in range(trials):
        p = random_negative_rooted(rng)
        if is_in_p_plus(op_L(p), isolate=False).verdict is not Verdict.IN_P_PLUS:
            bad += 1
    return bad == 0, f"{trials - bad}/{trials} images certified in P+"


def c02_narayana(n_max: int = 20) -> tuple[bool, str]:
    for n in range(n_max + 1):
        img = op_L(binomial_poly(n))
        if list(img.coeffs) != narayana_row(n):
            return False, f"coefficient mismatch at n={n}"
        if is_in_p_plus(img, n, isolate=False).verdict is not Verdict.IN_P_PLUS:
            return False, f"image not certified at n={n}"
    return True, f"n=0..{n_max} exact and certified"


def c03_el_exp(seed: int = 0, full_n: int = 5, random_mus: int = 100, random_n: int = 12,
               trials: int = 50, full_limit: int | None = None) -> tuple[bool, str]:
    values = (-2, -1, 1, 2)
    checked = 0
    # every mu supported in {0..4} with nonzero entries in {-2,-1,1,2}, including mu = 0
    for code in range((len(values) + 1) ** 5):
        if full_limit is not None and checked >= full_limit:
            break
        digits, mu = code, {}
        for i in range(5):
            digits, d = divmod(digits, len(values) + 1)
            if d:
                mu[i] = values[d - 1]
        w = WeightSeq(mu)
        for n in range(full_n + 1):
            rep = verify_identity(Identity.EL_EXP, w, n, Mode.FULL_EXPANSION)
            if not rep.verdict:
                return False, f"full expansion differs for mu={mu}, n={n}"
        checked += 1
    rng = _rng(seed, 3)
    for i in range(random_mus):
        w = random_mu(rng, 8, 4)
        n = rng.randint(0, random_n)
        rep = verify_identity(Identity.EL_EXP, w, n, Mode.RANDOM_EVAL, trials, seed=derive(seed, 3, i))
        if not rep.verdict:
            return False, f"random evaluation differs for mu={w!r}, n={n}"
    return True, f"{checked} mu fully expanded for n<={full_n}, {random_mus} mu x {trials} random trials"


def c04_catalan() -> tuple[bool, str]:
    g = gamma_from_mu(WeightSeq({0: 1, 2: -1}), 16).upto(16)
    even = [g[k] for k in range(0, 17, 2)]
    odd = [g[k] for k in range(1, 17, 2)]
    want = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    ok = even == want and all(v == 0 for v in odd)
    return ok, "even entries " + " ".join(str(v) for v in even)


def c05_gws2(seed: int = 0, trials: int = 200, n_max: int = 10) -> tuple[bool, str]:
    rng = _rng(seed, 5)
    for _ in range(trials):
        mu = random_mu(rng, 8, 4)
        n = rng.randint(0, n_max)
        if op_T_mu(binomial_poly(n), mu) != clear_joukowski(p_mu_n(mu, n), n):
            return False, f"identity fails for mu={mu!r}, n={n}"
    return True, f"{trials} random (mu, n) exact"


def c06_alg_equivalence(seed: int = 0, trials: int = 200, n_max: int = 10) -> tuple[bool, str]:
    rng = _rng(seed, 6)
    members = 0
    for _ in range(trials):
        alpha = random_alpha(rng)
        n = rng.randint(1, n_max)
        for name, op, cond in (("U", op_U_alpha, algU_condition_poly), ("V", op_V_alpha, algV_condition_poly)):
            lhs = in_p_plus_or_zero(op(binomial_poly(n), alpha))
            rhs = in_p_plus_or_zero(cond(alpha, n))
            if lhs != rhs:
                return False, f"{name} verdicts disagree for alpha={alpha!r}, n={n}"
            members += lhs
    return True, f"{2 * trials} verdict pairs agree ({members} in P+, {2 * trials - members} outside)"


def c07_chebyshev(seed: int = 0, trials: int = 100, K: int = 20) -> tuple[bool, str]:
    rng = _rng(seed, 7)
    for _ in range(trials):
        mu = WeightSeq.dense(rng.rational(-10, 10, 10) for _ in range(K + 1))
        if mu_from_gamma(gamma_from_mu(mu, K), K).upto(K) != mu.upto(K):
            return False, f"round trip fails for mu={mu!r}"
    return True, f"{trials} round trips on [0, {K}]"


def c08_sr(n_max: int = 20, k_max: int = 20) -> tuple[bool, str]:
    for r in range(4):
        for n in range(n_max + 1):
            b = binomial_poly(n)
            if not in_p_plus_or_zero(op_S_r(b, r), n):
                return False, f"S_{r}((1+z)^{n}) not in P+"
            if not in_p_plus_or_zero(op_S_r_prime(b, r), n):
                return False, f"S'_{r}((1+z)^{n}) not in P+"
    for k in range(k_max + 1):
        fk = factorial(k)
        closed = (
            (1, False, Fraction(1, fk * factorial(k + 1))),
            (2, False, Fraction(2 + 4 * k, fk * factorial(k + 2))),
            (3, True, Fraction(12 * (k * k + 2 * k + 2), fk * factorial(k + 4))),
        )
        for r, shifted, want in closed:
            if sr_exp_coeff(r, k, shifted) != want or sr_exp_coeff_oracle(r, k, shifted) != want:
                return False, f"coefficient r={r} k={k} shifted={shifted} mismatch"
    return True, f"r=0..3, n<={n_max} in P+ or zero; closed forms exact for k<={k_max}"


def c09_boros_moll(m_max: int = 30) -> tuple[bool, str]:
    if boros_moll_row(1).d != (Fraction(3, 2), 1) or boros_moll_row(2).d != (Fraction(21, 8), Fraction(15, 4), Fraction(3, 2)):
        return False, "rows at m=1, 2 differ"
    for m in range(m_max + 1):
        d = list(boros_moll_row(m).d)
        if d != boros_moll_oracle(m):
            return False, f"oracle mismatch at m={m}"
        if any(d[l] ** 2 < d[l - 1] * d[l + 1] for l in range(1, m)):
            return False, f"not log-concave at m={m}"
        if not check_qr_relation(m):
            return False, f"Q/R relation fails at m={m}"
    if not boros_moll_recurrence_holds(m_max):
        return False, "recurrence in m fails"
    return True, f"m<={m_max}: oracle, recurrence, log-concavity and Q/R relation exact"


def c10_conjectures(m_max: int = 25, lc_m_max: int = 20, depth: int = 5, jobs: int = 1) -> tuple[bool, str]:
    records = check_conjecture("FACT0", m_max, jobs) + check_conjecture("FACT2", m_max, jobs)
    records += [logconcavity_record(m, depth) for m in range(lc_m_max + 1)]
    findings = [r for r in records if r.verdict != "PASS"]
    if findings:
        r = findings[0]
        return False, f"{len(findings)} finding(s), first {r.experiment} {r.params}"
    return True, f"FACT0/FACT2 real-rooted for m<={m_max}; depth {depth} reached for m<={lc_m_max}"


def c11_hurwitz(seed: int = 0, trials: int = 500, slack: float = 1e-9) -> tuple[bool, str]:
    rng = _rng(seed, 11)
    stable = 0
    for _ in range(trials):
        p = random_hurwitz_candidate(rng)
        exact = is_weakly_hurwitz(p).verdict is Verdict.WEAKLY_HURWITZ
        if exact != numeric_weakly_hurwitz(p, slack):
            return False, f"verdicts disagree on {p!r}"
        stable += exact
    return True, f"{trials} verdicts agree ({stable} stable, {trials - stable} unstable)"


def c12_sector(seed: int = 0, trials: int = 100, slack: float = 1e-9) -> tuple[bool, str]:
    theta = math.pi / 6
    alpha = WeightSeq.dense([1, -1])
    worst = 0.0
    for kind in ("U", "V"):
        rng = _rng(seed, 12 if kind == "U" else 112)
        for _ in range(trials):
            rec = sector_experiment(alpha, random_sector_poly(rng, theta), theta, kind, slack)
            if rec.verdict != "PASS":
                return False, f"{kind}: {rec.verdict} {rec.witness}"
            worst = max(worst, rec.witness.get("max_angle", 0.0))
    return True, f"{2 * trials} images inside the sector of half-angle pi/3 (largest angle {worst:.3g})"


def c13_szasz(seed: int = 0, polys: int = 200, points: int = 50, rel: float = 1e-6) -> tuple[bool, str]:
    rng = _rng(seed, 13)
    for i in range(polys):
        p = random_negative_rooted(rng, 10)
        for j in range(points):
            # deterministic grid: radii and angles cover the disk |z| <= 4
            z = cmath.rect(4 * (j % 10 + 1) / 10, 2 * math.pi * (j // 10) / 5 + 0.3 * i)
            val = abs(complex(p(complex(z))))
            bound = szasz_bound(p, z)
            if val > bound * (1 + rel):
                return False, f"bound exceeded for {p!r} at z={z}"
    return True, f"{polys} polynomials x {points} points within the bound"


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    budget: float
    run: Callable[..., tuple[bool, str]]
    quick: dict


CRITERIA = (
    Criterion(1, "L preserves P+ on random products", 60, c01_conjecture1, {"trials": 100}),
    Criterion(2, "Narayana coefficients", 5, c02_narayana, {}),
    Criterion(3, "el-exp identity", 120, c03_el_exp, {"full_n": 4, "full_limit": 40, "random_mus": 10, "random_n": 8, "trials": 5}),
    Criterion(4, "Catalan link", 1, c04_catalan, {}),
    Criterion(5, "T_mu and P_mu,n cleared identity", 30, c05_gws2, {"trials": 40}),
    Criterion(6, "U/V alpha condition equivalence", 60, c06_alg_equivalence, {"trials": 40}),
    Criterion(7, "Chebyshev round trip", 1, c07_chebyshev, {"trials": 20}),
    Criterion(8, "S_r and S'_r evidence", 30, c08_sr, {"n_max": 12, "k_max": 12}),
    Criterion(9, "Boros-Moll coefficients", 30, c09_boros_moll, {"m_max": 15}),
    Criterion(10, "Boros-Moll conjecture probes", 600, c10_conjectures, {"m_max": 10, "lc_m_max": 8, "depth": 3}),
    Criterion(11, "Hurwitz exact vs numeric", 60, c11_hurwitz, {"trials": 100}),
    Criterion(12, "sector doubling", 60, c12_sector, {"trials": 20}),
    Criterion(13, "Szasz growth bound", 30, c13_szasz, {"polys": 40}),
)


def run_criterion(c: Criterion, quick: bool = False, **overrides) -> CriterionResult:
    kwargs = dict(c.quick) if quick else {}
    kwargs.update(overrides)
    t0 = time.perf_counter()
    try:
        ok, detail = c.run(**kwargs)
    except Exception as exc:  # a crash is a failed criterion, reported rather than raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(c.number, c.title, ok, detail, time.perf_counter() - t0, c.budget)


def run_all(quick: bool = False, seed: int = 0) -> list[CriterionResult]:
    out = []
    for c in CRITERIA:
        extra = {"seed": seed} if "seed" in c.run.__code__.co_varnames else {}
        out.append(run_criterion(c, quick, **extra))
    return out
