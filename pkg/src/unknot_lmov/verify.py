"""Executable checks for the integrality theorems and the lemmas behind them.

Every suite enumerates its cases in a fixed order, runs one check per case and
collects a :class:`VerifyReport`. A failing case keeps the full input dict, so
calling the matching ``_case_*`` function on it reproduces the failure alone.
Cases outside a lemma's hypotheses are counted as skipped, not run.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .arith import INFINITE, binom_z, divisors, factorize, fp, is_prime, vp
from .invariants import (
    Q_L_MINUS_M_HALF,
    Q_M_HALF_MINUS_L,
    TheoremViolation,
    bps_table,
    cleared_g_m,
    cleared_z_m,
    g_m,
    g_mu,
    gks_extremal,
    n_ml,
    n_pair,
    pair_genus0_coefficient,
    phi,
    phi_character,
    z2_g,
    z_m,
    z_m_closed,
    genus0_row,
)
from .laurent import LPoly, bracket, cyclotomic, exact_div, format_rational
from .partitions import Partition, enumerate_partitions

__all__ = [
    "Failure",
    "SUITES",
    "VerifyReport",
    "check_bps_integrality",
    "check_closed_form",
    "check_divisibility",
    "check_eq_fp_sign",
    "check_extremal",
    "check_genus0_integrality",
    "check_genus0_rows",
    "check_lemma_binom_p",
    "check_lemma_cm",
    "check_lemma_fp_power",
    "check_lemma_valuation",
    "check_orientation",
    "check_pair_integrality",
    "check_pair_pipeline",
    "check_parity",
    "check_phi_identity",
    "check_pipeline",
    "check_theorems",
    "merge_reports",
    "run_suites",
]

SKIP = "skip"

# q-sign of the pair charge (m1+m2)/2 that goes with each genus-0 orientation:
# Q = l - m/2 puts the l = m end at +m/2.
PAIR_SIGN = {Q_L_MINUS_M_HALF: 1, Q_M_HALF_MINUS_L: -1}


def _plain(x):
    """JSON-ready form of an observed value; rationals never become floats."""
    if x is INFINITE:
        return "inf"
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, LPoly):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


@dataclass(frozen=True)
class Failure:
    case: dict
    relation: str
    observed: dict

    def to_dict(self) -> dict:
        return {"case": _plain(self.case), "relation": self.relation, "observed": _plain(self.observed)}


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    skipped: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    seed: int | None = None
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict:
        """Serializable view. Wall time is left out unless asked for, so the
        default output depends only on the inputs."""
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "skipped": self.skipped,
            "seed": self.seed,
            "params": _plain(self.params),
            "failures": [f.to_dict() for f in self.failures],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.suite}: {self.cases_run} cases, {self.skipped} skipped, "
            f"{len(self.failures)} failures"
        )


def merge_reports(suite: str, reports: Sequence[VerifyReport], **params) -> VerifyReport:
    out = VerifyReport(suite, params=params)
    for r in reports:
        out.cases_run += r.cases_run
        out.skipped += r.skipped
        out.failures.extend(r.failures)
        out.elapsed += r.elapsed
        out.seed = r.seed if out.seed is None else out.seed
    return out


def _run(
    suite: str,
    cases: Iterable[dict],
    check: Callable[[dict], object],
    params: dict,
    seed: int | None = None,
    extra: Iterable[dict] = (),
    jobs: int = 1,
) -> VerifyReport:
    start = time.perf_counter()
    cases = list(cases) + list(extra)
    if jobs > 1 and len(cases) > 1:
        chunk = max(1, len(cases) // (8 * jobs))
        with ProcessPoolExecutor(jobs) as pool:
            outcomes = list(pool.map(check, cases, chunksize=chunk))
    else:
        outcomes = [check(c) for c in cases]
    report = VerifyReport(suite, seed=seed, params=params)
    for case, outcome in zip(cases, outcomes):
        if outcome == SKIP:
            report.skipped += 1
            continue
        report.cases_run += 1
        if outcome is not None:
            relation, observed = outcome
            report.failures.append(Failure(dict(case), relation, observed))
    report.elapsed = time.perf_counter() - start
    return report


def _samples(seed: int | None, count: int, draw: Callable[[random.Random], dict]) -> list[dict]:
    if seed is None or count <= 0:
        return []
    rng = random.Random(seed)
    return [draw(rng) for _ in range(count)]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


# -- number theory ------------------------------------------------------------


def _case_fp_power(c: dict):
    p, alpha, n = c["p"], c["alpha"], c["n"]
    if p == 2 and alpha == 1:
        r = (fp(2 * n, 2, 4) - _sign(n // 2)) % 4
        if vp(r, 2) >= 2:
            return None
        return "f_2(2n) = (-1)^[n/2] mod 4", {"residue": r, "modulus": 4}
    M = p ** (2 * alpha)
    r = (fp(p**alpha * n, p, M) - pow(fp(p**alpha, p, M), n, M)) % M
    if vp(r, p) >= 2 * alpha:
        return None
    return "p^(2 alpha) | f_p(p^alpha n) - f_p(p^alpha)^n", {"residue": r, "modulus": M}


def check_lemma_fp_power(p: int, alpha: int, n_max: int, *, seed=None, samples=0, jobs=1) -> VerifyReport:
    _require_prime(p)
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    cases = ({"p": p, "alpha": alpha, "n": n} for n in range(1, n_max + 1))
    extra = _samples(seed, samples, lambda rng: {"p": p, "alpha": alpha, "n": rng.randint(n_max + 1, 4 * n_max + 4)})
    return _run("fp_power", cases, _case_fp_power, {"p": p, "alpha": alpha, "n_max": n_max}, seed, extra, jobs)


def _case_binom_p(c: dict):
    p, m, l, tau = c["p"], c["m"], c["l"], c["tau"]
    if m % p or l == 0:
        return SKIP
    alpha, beta = vp(m, p), vp(l, p)
    if p == 2:
        first = _sign(m * tau + m + l) * math.comb(m, l) * binom_z(m * tau + l - 1, m - 1)
        second = 0
        if beta >= 1:
            second = (
                _sign((m * tau + m + l) // 2)
                * math.comb(m // 2, l // 2)
                * binom_z((m * tau + l) // 2 - 1, m // 2 - 1)
            )
    else:
        first = math.comb(m, l) * binom_z(m * tau + l - 1, m - 1)
        second = 0
        if beta >= 1:
            second = math.comb(m // p, l // p) * binom_z((m * tau + l) // p - 1, m // p - 1)
    v = vp(first - second, p)
    if v >= 2 * alpha:
        return None
    return "p^(2 alpha) | binomial difference", {"valuation": v, "needed": 2 * alpha}


def check_lemma_binom_p(p: int, m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    """``p^(2 alpha)`` divides the binomial difference for ``m = p^alpha a``, ``l = p^beta b``."""
    _require_prime(p)
    cases = (
        {"p": p, "m": m, "l": l, "tau": tau}
        for m in range(p, m_max + 1, p)
        for l in range(0, m + 1)
        for tau in taus
    )
    span = max(abs(t) for t in taus) if taus else 1

    def draw(rng):
        m = p * rng.randint(1, max(1, 2 * m_max // p))
        return {"p": p, "m": m, "l": rng.randint(1, m), "tau": rng.randint(-3 * span, 3 * span)}

    params = {"p": p, "m_max": m_max, "taus": list(taus)}
    return _run("binom_p", cases, _case_binom_p, params, seed, _samples(seed, samples, draw), jobs)


def _case_valuation(c: dict):
    a, b, tau, p = c["a"], c["b"], c["tau"], c["p"]
    bound = vp(a + b, p) - vp(math.gcd(a, b), p)
    v = vp(binom_z(a * tau + a - 1, a) * binom_z(b * tau + b, b), p)
    if v >= bound:
        return None
    return "v_p(binomial product) >= alpha - beta", {"valuation": v, "bound": bound}


def _valuation_cases(a: int, b: int, tau: int) -> list[dict]:
    return [{"a": a, "b": b, "tau": tau, "p": p} for p, _ in factorize(a + b)]


def check_lemma_valuation(ab_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    """Runs every prime ``p | a + b`` (other primes make the bound trivially 0)."""
    cases = [
        case
        for a in range(1, ab_max + 1)
        for b in range(1, ab_max + 1)
        for tau in taus
        for case in _valuation_cases(a, b, tau)
    ]
    extra = []
    if seed is not None and samples > 0:
        rng = random.Random(seed)
        span = max(abs(t) for t in taus) if taus else 1
        for _ in range(samples):
            a, b = rng.randint(1, 4 * ab_max), rng.randint(1, 4 * ab_max)
            extra.extend(_valuation_cases(a, b, rng.randint(-3 * span, 3 * span)))
    params = {"ab_max": ab_max, "taus": list(taus)}
    return _run("valuation", cases, _case_valuation, params, seed, extra, jobs)


def _case_fp_sign(c: dict):
    p, alpha, k, clause = c["p"], c["alpha"], c["k"], c["clause"]
    M = p**alpha
    power = pow(fp(M, p, M), k, M)
    if clause == "power":
        lhs = fp(M * k, p, M)
        if (lhs - power) % M == 0:
            return None
        return "f_p(p^alpha k) = f_p(p^alpha)^k mod p^alpha", {"lhs": lhs, "rhs": power, "modulus": M}
    if (power - _sign(k)) % M == 0:
        return None
    return "f_p(p^alpha)^k = (-1)^k mod p^alpha", {"lhs": power, "rhs": _sign(k) % M, "modulus": M}


def check_eq_fp_sign(p: int, alpha: int, k_max: int, *, seed=None, samples=0, jobs=1) -> VerifyReport:
    """Both congruences of the chain ``f_p(p^a k) = f_p(p^a)^k = (-1)^k mod p^a``, one case each."""
    _require_prime(p)
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    cases = (
        {"p": p, "alpha": alpha, "k": k, "clause": clause}
        for k in range(0, k_max + 1)
        for clause in ("power", "sign")
    )

    def draw(rng):
        return {"p": p, "alpha": alpha, "k": rng.randint(k_max + 1, 5 * k_max + 5), "clause": rng.choice(("power", "sign"))}

    params = {"p": p, "alpha": alpha, "k_max": k_max}
    return _run("fp_sign", cases, _case_fp_sign, params, seed, _samples(seed, samples, draw), jobs)


# -- identities ---------------------------------------------------------------


def _cm_series_coefficient(k: int, m: int) -> LPoly:
    # t^m in (1 - t/y)^k * (1 - t y)^(-k), with y = q^(1/2)
    num = [LPoly.monomial(-i, 0, (-1) ** i * math.comb(k, i)) for i in range(m + 1)]
    den = [LPoly.monomial(j, 0, math.comb(k + j - 1, j)) for j in range(m + 1)]
    out = LPoly()
    for i in range(m + 1):
        out = out + num[i] * den[m - i]
    return out


def _case_cm(c: dict):
    k, m = c["k"], c["m"]
    lhs = LPoly()
    for lam in enumerate_partitions(m):
        term = LPoly.const(Fraction(k ** len(lam), lam.zee))
        for part in lam:
            term = term * bracket(part)
        lhs = lhs + term
    rhs = _cm_series_coefficient(k, m)
    if lhs == rhs:
        return None
    return "partition sum = series coefficient", {"partition_sum": lhs, "series": rhs}


def check_lemma_cm(k_max: int, m_max: int, *, seed=None, samples=0, jobs=1) -> VerifyReport:
    """``sum_{|lam|=m} k^l(lam)/z_lam {lam}_{y^2}`` against ``[t^m] ((1 - t/y)/(1 - t y))^k``."""
    cases = ({"k": k, "m": m} for k in range(1, k_max + 1) for m in range(0, m_max + 1))
    extra = _samples(seed, samples, lambda rng: {"k": rng.randint(1, 2 * k_max), "m": rng.randint(0, m_max + 2)})
    return _run("cm", cases, _case_cm, {"k_max": k_max, "m_max": m_max}, seed, extra, jobs)


def _case_phi(c: dict):
    d, nu, tau = c["d"], Partition(c["nu"]), c["tau"]
    lhs = phi(d, nu, tau)
    rhs = phi_character(Partition((d,)), nu, tau)
    if lhs == rhs:
        return None
    return "product form = character sum", {"product": lhs, "characters": rhs}


def check_phi_identity(n_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    """Product form of ``phi_(d),nu`` against its character sum for ``|nu| = d <= n_max``.

    The character sum vanishes unless ``|nu| = d``, so only those pairs are run.
    """
    cases = (
        {"d": n, "nu": list(nu), "tau": tau}
        for n in range(1, n_max + 1)
        for nu in enumerate_partitions(n)
        for tau in taus
    )
    return _run("phi", cases, _case_phi, {"n_max": n_max, "taus": list(taus)}, seed, (), jobs)


# -- theorems -----------------------------------------------------------------


def _case_genus0_integrality(c: dict):
    v = n_ml(c["m"], c["l"], c["tau"])
    if type(v) is int:
        return None
    return "n_ml is an integer", {"value": v}


def check_genus0_integrality(m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"m": m, "l": l, "tau": tau} for m in range(1, m_max + 1) for l in range(m + 1) for tau in taus)
    span = max(abs(t) for t in taus) if taus else 1

    def draw(rng):
        m = rng.randint(1, 2 * m_max)
        return {"m": m, "l": rng.randint(0, m), "tau": rng.randint(-3 * span, 3 * span)}

    params = {"m_max": m_max, "taus": list(taus)}
    return _run("genus0_integrality", cases, _case_genus0_integrality, params, seed, _samples(seed, samples, draw), jobs)


def _case_pair_integrality(c: dict):
    m1, m2, tau = c["m1"], c["m2"], c["tau"]
    v, w = n_pair(m1, m2, tau), n_pair(m2, m1, tau)
    if type(v) is int and v == w:
        return None
    return "n_pair is an integer and swap symmetric", {"value": v, "swapped": w}


def check_pair_integrality(m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"m1": m1, "m2": m2, "tau": tau} for m1 in range(1, m_max + 1) for m2 in range(1, m1 + 1) for tau in taus)
    span = max(abs(t) for t in taus) if taus else 1

    def draw(rng):
        return {"m1": rng.randint(1, 2 * m_max), "m2": rng.randint(1, 2 * m_max), "tau": rng.randint(-3 * span, 3 * span)}

    params = {"m_max": m_max, "taus": list(taus)}
    return _run("pair_integrality", cases, _case_pair_integrality, params, seed, _samples(seed, samples, draw), jobs)


def _case_bps_integrality(c: dict):
    try:
        table = bps_table(c["m"], c["tau"])
    except TheoremViolation as exc:
        return "z^2 g_m rewrites in z^2 with integer coefficients", {"error": str(exc)}
    if table.is_integral():
        return None
    return "z^2 g_m rewrites in z^2 with integer coefficients", {"table": table.to_json()}


def check_bps_integrality(m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"m": m, "tau": tau} for m in range(1, m_max + 1) for tau in taus)
    return _run("bps_integrality", cases, _case_bps_integrality, {"m_max": m_max, "taus": list(taus)}, seed, (), jobs)


def _case_closed_form(c: dict):
    m, tau = c["m"], c["tau"]
    if tau == 0:
        return SKIP
    closed = z_m_closed(m, tau)
    partition_sum = (z_m(m, tau) * bracket(m) * bracket(m * tau)).to_lpoly()
    if partition_sum is not None and closed == partition_sum.scalar_mul(_sign(m * tau)):
        return None
    return "z_m_closed = (-1)^(m tau) {m}{m tau} z_m", {"closed": closed, "partition_sum": partition_sum}


def check_closed_form(m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"m": m, "tau": tau} for m in range(1, m_max + 1) for tau in taus)
    return _run("closed_form", cases, _case_closed_form, {"m_max": m_max, "taus": list(taus)}, seed, (), jobs)


def _case_divisibility(c: dict):
    m, tau, n, power = c["m"], c["tau"], c["n"], c["power"]
    if tau == 0:
        return SKIP
    f, phi_n = cleared_g_m(m, tau), cyclotomic(n)
    for _ in range(power):
        f = exact_div(f, phi_n)
        if f is None:
            break
    else:
        return None
    return f"Phi_n(q)^{power} divides {{m}}{{m tau}} g_m", {}


def _divisibility_cases(m: int, tau: int) -> list[dict]:
    if tau == 0:
        return [{"m": m, "tau": 0, "n": 1, "power": 0}]
    out = [{"m": m, "tau": tau, "n": n, "power": 2} for n in divisors(m) if n != 1]
    out += [{"m": m, "tau": tau, "n": n, "power": 1} for n in divisors(m * abs(tau)) if m % n]
    return out


def check_divisibility(m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    """``Phi_n^2`` for ``n | m, n != 1`` and ``Phi_n`` for ``n | m tau, n`` not dividing ``m``."""
    cases = [c for m in range(1, m_max + 1) for tau in taus for c in _divisibility_cases(m, tau)]
    return _run("divisibility", cases, _case_divisibility, {"m_max": m_max, "taus": list(taus)}, seed, (), jobs)


def _case_parity(c: dict):
    m, tau = c["m"], c["tau"]
    try:
        f = z2_g(m, tau)
    except TheoremViolation as exc:
        return "z^2 g_m is a Laurent polynomial", {"error": str(exc)}
    inverted = f.substitute_power(-1, 1)
    half_powers = sorted({q2 for (q2, _), _ in f.items() if q2 % 2})
    if inverted == f and not half_powers:
        return None
    return "z^2 g_m is invariant under q -> 1/q and has only integer q powers", {
        "symmetric": inverted == f,
        "half_q_powers_doubled": half_powers,
    }


def check_parity(m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"m": m, "tau": tau} for m in range(1, m_max + 1) for tau in taus)
    return _run("parity", cases, _case_parity, {"m_max": m_max, "taus": list(taus)}, seed, (), jobs)


def _case_pipeline(c: dict):
    m, tau = c["m"], c["tau"]
    if g_mu(Partition((m,)), tau) == g_m(m, tau):
        return None
    return "g_mu((m)) = g_m", {}


def check_pipeline(m_max: int, taus: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"m": m, "tau": tau} for m in range(1, m_max + 1) for tau in taus)
    return _run("pipeline", cases, _case_pipeline, {"m_max": m_max, "taus": list(taus)}, seed, (), jobs)


def _case_pair_pipeline(c: dict):
    m1, m2, tau = c["m1"], c["m2"], c["tau"]
    sign = PAIR_SIGN[c["orientation"]]
    try:
        coefficient = pair_genus0_coefficient(m1, m2, tau, sign)
    except TheoremViolation as exc:
        return "g_mu((m1,m2)) has an integer z^2 expansion", {"error": str(exc)}
    expected = n_pair(m1, m2, tau)
    if coefficient == expected:
        return None
    return "n_pair = genus-0 coefficient at the full pair charge", {"n_pair": expected, "coefficient": coefficient}


def check_pair_pipeline(s_max: int, taus: Sequence[int], orientation: str, *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = (
        {"m1": m1, "m2": s - m1, "tau": tau, "orientation": orientation}
        for s in range(2, s_max + 1)
        for m1 in range((s + 1) // 2, s)
        for tau in taus
    )
    params = {"s_max": s_max, "taus": list(taus), "orientation": orientation}
    return _run("pair_pipeline", cases, _case_pair_pipeline, params, seed, (), jobs)


def _case_genus0_rows(c: dict):
    m, tau, orientation = c["m"], c["tau"], c["orientation"]
    try:
        row = genus0_row(m, tau, orientation)
        full = bps_table(m, tau).genus_row(0)
    except TheoremViolation as exc:
        return "genus-0 row of bps_table equals n_ml", {"error": str(exc)}
    expected = {l: n_ml(m, l, tau) for l in range(m + 1)}
    if row == expected and len(full) == sum(1 for v in expected.values() if v):
        return None
    return "genus-0 row of bps_table equals n_ml", {"row": row, "n_ml": expected}


def check_genus0_rows(m_max: int, taus: Sequence[int], orientation: str, *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"m": m, "tau": tau, "orientation": orientation} for m in range(1, m_max + 1) for tau in taus)
    params = {"m_max": m_max, "taus": list(taus), "orientation": orientation}
    return _run("genus0_rows", cases, _case_genus0_rows, params, seed, (), jobs)


def check_orientation(
    m_max: int,
    taus: Sequence[int],
    s_max: int,
    pair_taus: Sequence[int],
    *,
    seed=None,
    samples=0,
    jobs=1,
) -> VerifyReport:
    """Genus-0 rows and pair coefficients under one shared charge orientation.

    Passes when some orientation makes both families match; otherwise every
    mismatch under every orientation is reported.
    """
    per_orientation = {}
    for orientation in (Q_L_MINUS_M_HALF, Q_M_HALF_MINUS_L):
        rows = check_genus0_rows(m_max, taus, orientation, jobs=jobs)
        pairs = check_pair_pipeline(s_max, pair_taus, orientation, jobs=jobs)
        per_orientation[orientation] = merge_reports("orientation", [rows, pairs])
    params = {"m_max": m_max, "taus": list(taus), "s_max": s_max, "pair_taus": list(pair_taus)}
    report = merge_reports("orientation", list(per_orientation.values()), **params)
    clean = [o for o, r in per_orientation.items() if r.passed]
    if clean:
        report.failures = []
        report.params["orientation"] = clean[0]
    return report


def _case_extremal(c: dict):
    try:
        v = gks_extremal(c["p"], c["r"], c["sign"])
    except ValueError:
        return SKIP
    if type(v) is int:
        return None
    return "extremal invariant is an integer", {"value": v}


def check_extremal(r_max: int, ps: Sequence[int], *, seed=None, samples=0, jobs=1) -> VerifyReport:
    cases = ({"p": p, "r": r, "sign": s} for p in ps for r in range(1, r_max + 1) for s in ("-", "+"))

    def draw(rng):
        p = rng.choice([rng.randint(-20, -1), rng.randint(2, 20)])
        return {"p": p, "r": rng.randint(1, 2 * r_max), "sign": rng.choice("-+")}

    params = {"r_max": r_max, "ps": list(ps)}
    return _run("extremal", cases, _case_extremal, params, seed, _samples(seed, samples, draw), jobs)


def check_theorems(
    genus0=(40, range(-8, 9)),
    pair=(25, range(-6, 7)),
    bps=(8, range(-4, 5)),
    closed=(8, range(-4, 5)),
    divisibility=(8, range(-4, 5)),
    *,
    seed=None,
    samples=0,
    jobs=1,
) -> VerifyReport:
    """The three integrality theorems plus the divisibility and closed-form lemmas.

    Each keyword is ``(m_max, taus)`` for one family.
    """
    reports = [
        check_genus0_integrality(genus0[0], list(genus0[1]), seed=seed, samples=samples, jobs=jobs),
        check_pair_integrality(pair[0], list(pair[1]), seed=seed, samples=samples, jobs=jobs),
        check_bps_integrality(bps[0], list(bps[1]), jobs=jobs),
        check_closed_form(closed[0], list(closed[1]), jobs=jobs),
        check_divisibility(divisibility[0], list(divisibility[1]), jobs=jobs),
    ]
    out = merge_reports("theorems", reports, parts=[r.suite for r in reports])
    out.seed = seed
    return out


# -- registry -----------------------------------------------------------------

PRIMES = (2, 3, 5, 7)


def _fp_power(**kw):
    return merge_reports("fp_power", [check_lemma_fp_power(p, a, 50, **kw) for p in PRIMES for a in (1, 2, 3)], primes=list(PRIMES), alphas=[1, 2, 3], n_max=50)


def _binom_p(**kw):
    return merge_reports("binom_p", [check_lemma_binom_p(p, 54, range(-5, 6), **kw) for p in PRIMES], primes=list(PRIMES), m_max=54, taus=list(range(-5, 6)))


def _fp_sign(**kw):
    return merge_reports("fp_sign", [check_eq_fp_sign(p, a, 20, **kw) for p in PRIMES for a in (1, 2, 3)], primes=list(PRIMES), alphas=[1, 2, 3], k_max=20)


SUITES: dict[str, Callable[..., VerifyReport]] = {
    "fp_power": _fp_power,
    "binom_p": _binom_p,
    "valuation": lambda **kw: check_lemma_valuation(24, range(-4, 5), **kw),
    "fp_sign": _fp_sign,
    "cm": lambda **kw: check_lemma_cm(6, 10, **kw),
    "phi": lambda **kw: check_phi_identity(8, range(-3, 4), **kw),
    "theorems": lambda **kw: check_theorems(**kw),
    "parity": lambda **kw: check_parity(8, range(-4, 5), **kw),
    "pipeline": lambda **kw: check_pipeline(6, range(-3, 4), **kw),
    "orientation": lambda **kw: check_orientation(8, range(-4, 5), 8, range(-3, 4), **kw),
    "extremal": lambda **kw: check_extremal(40, [*range(-6, 0), *range(2, 9)], **kw),
}


def run_suites(names: Iterable[str], seed: int | None = None, samples: int = 0, jobs: int = 1) -> list[VerifyReport]:
    """Run registry suites in the given order; ``"all"`` expands to every suite."""
    order: list[str] = []
    for name in names:
        for n in SUITES if name == "all" else [name]:
            if n not in SUITES:
                raise KeyError(f"unknown suite {n!r}; choose from {', '.join(SUITES)} or all")
            if n not in order:
                order.append(n)
    reports = []
    for name in order:
        report = SUITES[name](seed=seed, samples=samples, jobs=jobs)
        report.seed = seed
        reports.append(report)
    return reports
