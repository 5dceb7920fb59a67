"""Boros-Moll coefficients and the experiment harness.

Open conjectures are probed, never asserted: a violating instance comes back
as a ``FINDING`` record carrying an exact witness, while ``FAIL`` is reserved
for statements that are theorems (a ``FAIL`` there means a bug).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from math import comb, factorial
from typing import Optional

from .polycore import Poly, WeightSeq, format_poly_text, format_rational, format_weights
from .pool import parallel_map
from .rootcert import (
    Verdict,
    complex_roots_numeric,
    in_p_plus_or_zero,
    is_in_p_plus,
    is_real_rooted,
    sector_containment,
    sector_distance,
    count_real_roots,
)
from .transforms import (
    IterationReport,
    Kind,
    TransformSpec,
    binomial_poly,
    iterate_transform,
    jensen_poly,
    op_L,
    op_U_alpha,
    op_V_alpha,
    sr_exp_coeff,
    turan_shift_seq,
)

PASS, FAIL, FINDING, SKIPPED = "PASS", "FAIL", "FINDING", "SKIPPED"


@dataclass
class ExperimentRecord:
    experiment: str
    params: dict
    verdict: str
    witness: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.verdict in (PASS, SKIPPED)

    def to_json(self, timing: bool = False) -> dict:
        out = {"experiment": self.experiment, "params": self.params, "verdict": self.verdict, "witness": self.witness}
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rec = fn(*args, **kwargs)
        rec.wall_time = time.perf_counter() - t0
        return rec

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- Boros-Moll -------------------------------------------------------------

@dataclass(frozen=True)
class BorosMollRow:
    m: int
    d: tuple

    def as_poly(self) -> Poly:
        return Poly(self.d)


def boros_moll_row(m: int) -> BorosMollRow:
    """d_l(m) = 2^(-2m) sum_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, m) C(k, l)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    base = [2 ** k * comb(2 * m - 2 * k, m - k) * comb(m + k, m) for k in range(m + 1)]
    scale = 4 ** m
    return BorosMollRow(m, tuple(
        Fraction(sum(base[k] * comb(k, l) for k in range(l, m + 1)), scale) for l in range(m + 1)
    ))


def q_m_poly(m: int) -> Poly:
    d = boros_moll_row(m).d
    return Poly([c / factorial(l) for l, c in enumerate(d)])


def r_m_poly(m: int) -> Poly:
    d = boros_moll_row(m).d
    return Poly([c / factorial(l + 2) for l, c in enumerate(d)])


def check_qr_relation(m: int) -> bool:
    """Q_m == (z^2 R_m)''."""
    return r_m_poly(m).shift_degree(2).derivative(2) == q_m_poly(m)


def _conjecture_point(which: str, m: int) -> ExperimentRecord:
    t0 = time.perf_counter()
    p = q_m_poly(m) if which == "FACT0" else r_m_poly(m)
    cert = is_real_rooted(p, isolate=False)
    if cert.passed:
        rec = ExperimentRecord(which.lower(), {"m": m}, PASS, {"verdict": cert.verdict.value, "degree": p.degree})
    else:
        rec = ExperimentRecord(which.lower(), {"m": m}, FINDING, {
            "polynomial": format_poly_text(p), "certificate": cert.to_json(),
        })
    rec.wall_time = time.perf_counter() - t0
    return rec


def check_conjecture(which: str, m_max: int, jobs: int = 1) -> list[ExperimentRecord]:
    """Real-rootedness of Q_m ("FACT0") or R_m ("FACT2") for m = 0..m_max."""
    which = which.upper()
    if which not in ("FACT0", "FACT2"):
        raise ValueError("which must be FACT0 or FACT2")
    return parallel_map(partial(_conjecture_point, which), range(m_max + 1), jobs)


def check_infinite_logconcavity(seq: Poly, depth: int = 5) -> IterationReport:
    return iterate_transform(TransformSpec(Kind.L), seq, depth, "nonneg")


@_timed
def logconcavity_record(m: int, depth: int = 5) -> ExperimentRecord:
    rep = check_infinite_logconcavity(boros_moll_row(m).as_poly(), depth)
    verdict = PASS if rep.depth_achieved == depth else FINDING
    return ExperimentRecord("orig-con", {"m": m, "depth": depth}, verdict, rep.to_json())


@_timed
def fact0_two_fold(m: int) -> ExperimentRecord:
    """When Q_m is real-rooted, {d_l(m)} must survive two applications of L."""
    if not is_real_rooted(q_m_poly(m), isolate=False).passed:
        return ExperimentRecord("fact0-implies-2fold", {"m": m}, SKIPPED, {"reason": "Q_m not real-rooted"})
    rep = check_infinite_logconcavity(boros_moll_row(m).as_poly(), 2)
    verdict = PASS if rep.depth_achieved == 2 else FAIL
    return ExperimentRecord("fact0-implies-2fold", {"m": m}, verdict, rep.to_json())


# -- multiplier sequences ---------------------------------------------------

def _one_sign_real(p: Poly) -> tuple[bool, str]:
    if p.is_zero() or p.degree == 0:
        return True, ""
    cert = is_real_rooted(p, isolate=False)
    if not cert.passed:
        return False, cert.fail_reason
    pos = count_real_roots(p, Fraction(0), None)
    neg = count_real_roots(p, None, Fraction(0)) - (0 if p.coeffs[0] else 1)
    if pos and neg:
        return False, f"{neg} negative and {pos} positive roots"
    return True, ""


def multiplier_check(lam: WeightSeq, n_max: int, n_min: int = 0) -> list[ExperimentRecord]:
    """Finite Polya-Schur test: sum_k lambda_k C(n,k) z^k real-rooted with one-signed zeros."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    out = []
    for n in range(n_min, n_max + 1):
        t0 = time.perf_counter()
        p = jensen_poly(lam, n)
        ok, why = _one_sign_real(p)
        params = {"lambda": format_weights(lam), "n": n}
        w = {} if ok else {"polynomial": format_poly_text(p), "reason": why}
        out.append(ExperimentRecord("multiplier", params, PASS if ok else FAIL, w, time.perf_counter() - t0))
    return out


def gamma_reciprocal_weights(mu: int, K: int) -> WeightSeq:
    """lambda_k = 1/Gamma(k + mu) for integer mu >= 1, k = 0..K."""
    return WeightSeq.dense(Fraction(1, factorial(k + mu - 1)) for k in range(K + 1))


@_timed
def sr_laguerre_probe(r: int, n_max: int, shifted: bool = True) -> ExperimentRecord:
    """Jensen truncations of S_r(e^z) (or S'_r(e^z)) must stay in P+ if it lies in LP+."""
    # phi = sum a_k z^k / k! with a_k = k! * coefficient
    a = WeightSeq.dense(factorial(k) * sr_exp_coeff(r, k, shifted) for k in range(n_max + 1))
    name = "sr-prime-lp" if shifted else "sr-lp"
    for n in range(n_max + 1):
        p = jensen_poly(a, n)
        if not in_p_plus_or_zero(p, n):
            return ExperimentRecord(name, {"r": r, "n_max": n_max}, FINDING,
                                    {"n": n, "polynomial": format_poly_text(p)})
    return ExperimentRecord(name, {"r": r, "n_max": n_max}, PASS, {})


# -- iterated Turan inequalities --------------------------------------------

@_timed
def craven_csordas_depth(gamma: WeightSeq, K: int, depth: int, evidence_n: int) -> ExperimentRecord:
    """Jensen-truncation evidence for LP+ membership plus iterated Turan shifts.

    Each shift reads two entries past the one it produces, so after ``d``
    shifts only indices ``<= K - 2d`` are exact; nothing beyond that
    trusted prefix is inspected.
    """
    if 2 * depth > K - 1:
        raise ValueError(f"K={K} too small for depth {depth}: need 2*depth <= K-1")
    if evidence_n > K:
        raise ValueError("evidence_n cannot exceed K")
    params = {"gamma": format_weights(gamma), "K": K, "depth": depth, "evidence_n": evidence_n}
    bad_jensen = None
    for n in range(evidence_n + 1):
        p = jensen_poly(gamma, n)
        if not in_p_plus_or_zero(p, n):
            bad_jensen = {"n": n, "polynomial": format_poly_text(p)}
            break
    seq = gamma.upto(K)
    first_negative = None
    for d in range(1, depth + 1):
        seq = turan_shift_seq(seq)
        trusted = K - 2 * d
        for k in range(trusted + 1):
            if seq[k] < 0:
                first_negative = {"shift": d, "index": k, "value": format_rational(seq[k])}
                break
        if first_negative:
            break
    witness = {
        "jensen_in_p_plus": bad_jensen is None,
        "jensen_failure": bad_jensen,
        "trusted_prefix": K - 2 * depth + 1,
        "first_negative": first_negative,
    }
    verdict = PASS if bad_jensen is None and first_negative is None else FINDING
    return ExperimentRecord("craven-csordas", params, verdict, witness)


# -- sector theorems --------------------------------------------------------

@_timed
def sector_experiment(alpha: WeightSeq, p: Poly, theta: float, kind: str = "U", slack: float = 1e-9) -> ExperimentRecord:
    """Zeros of p in the sector of half-angle theta imply zeros of U_alpha(p) (or V_alpha(p)) in half-angle 2*theta."""
    params = {"alpha": format_weights(alpha), "poly": format_poly_text(p), "theta": theta, "kind": kind}
    op = op_U_alpha if kind == "U" else op_V_alpha
    if not 0 <= theta < math.pi / 2:
        return ExperimentRecord("sector", params, SKIPPED, {"precondition": "theta outside [0, pi/2)"})
    if p.degree < 1:
        return ExperimentRecord("sector", params, SKIPPED, {"precondition": "p must have degree >= 1"})
    roots = complex_roots_numeric(p).roots
    worst_in = max(sector_distance(r) for r in roots if abs(r) > slack) if any(abs(r) > slack for r in roots) else 0.0
    if worst_in >= theta + slack:
        return ExperimentRecord("sector", params, SKIPPED, {"precondition": "zeros of p outside the sector", "max_angle": worst_in})
    n = p.degree
    test = op(binomial_poly(n), alpha)
    if not is_in_p_plus(test, n, isolate=False).passed:
        return ExperimentRecord("sector", params, SKIPPED, {"precondition": f"{kind}_alpha((1+z)^{n}) not in P+"})
    image = op(p, alpha)
    if image.degree < 1:
        return ExperimentRecord("sector", params, PASS, {"image": format_poly_text(image), "max_angle": 0.0})
    img_roots = complex_roots_numeric(image)
    big = [r for r in img_roots.roots if abs(r) > slack]
    worst = max((sector_distance(r) for r in big), default=0.0)
    ok = sector_containment(img_roots, 2 * theta, slack) if theta > 0 else worst <= slack
    return ExperimentRecord("sector", params, PASS if ok else FAIL, {
        "image": format_poly_text(image),
        "max_angle": worst,
        "bound": 2 * theta,
        "residual": img_roots.residual_bound,
    })
