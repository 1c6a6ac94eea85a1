"""Dynamic-programming bound tables and closed-form tail sums.

Grids are computed in double precision (every per-step weight in the pure
degree table is dyadic, so the accumulated rounding error stays far below
1e-9); the monotone-degree recursion is evaluated in exact rationals.
Infinite tails are closed forms where the cap function is polynomial and
partial sums plus a rigorous closed-form remainder otherwise, so every
headline is an upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt, log
from typing import Callable

import mpmath

mpmath.mp.dps = 50

# 10-digit Euler-Mascheroni constant used by the certificate/sensitivity bound
EULER_GAMMA = 0.5772156649

# Caps on block sensitivity per degree certified by the moment-curve LP scan
# (reproduced and re-verified by lp.lp_bs_cap; see tests).
LP_CAP_TABLE = {
    1: 1, 2: 3, 3: 6, 4: 10, 5: 15, 6: 21, 7: 29,
    8: 38, 9: 47, 10: 58, 11: 71, 12: 84, 13: 99, 14: 114,
}


def markov_cap(d: int) -> int:
    """Largest b with b^2 - b <= (2/3)(d^4 - d^2), exactly."""
    c = 2 * (d ** 4 - d ** 2) // 3  # d^4 - d^2 is always divisible by 3
    b = (1 + isqrt(1 + 4 * c)) // 2
    while b * b - b > c:
        b -= 1
    while (b + 1) * (b + 1) - (b + 1) <= c:
        b += 1
    return max(1, b)


@dataclass(frozen=True)
class CapProfile:
    """Per-degree upper bound on block sensitivity, with provenance."""

    mode: str  # "square" | "lp" | "markov"

    def bd(self, d: int) -> int:
        if d < 1:
            raise ValueError(f"degree must be positive, got {d}")
        if self.mode == "square":
            return d * d
        if self.mode == "lp":
            return LP_CAP_TABLE[d] if d <= 14 else d * d
        # markov mode keeps the tighter LP value where it exists
        m = markov_cap(d)
        return min(m, LP_CAP_TABLE[d]) if d <= 14 else m

    def source(self, d: int) -> str:
        if self.mode == "square":
            return "square"
        if self.mode == "lp":
            return "lp-table" if d <= 14 else "square"
        if d <= 14:
            return "lp-table" if LP_CAP_TABLE[d] <= markov_cap(d) else "markov"
        return "markov"


SQUARE_CAPS = CapProfile("square")
LP_CAPS = CapProfile("lp")
MARKOV_CAPS = CapProfile("markov")


def cap_profile(name: str) -> CapProfile:
    try:
        return {"square": SQUARE_CAPS, "lp": LP_CAPS, "markov": MARKOV_CAPS}[name]
    except KeyError:
        raise ValueError(f"unknown cap mode {name!r}") from None


# ---------------------------------------------------------------------------
# geometric tail sums
# ---------------------------------------------------------------------------

def _base_sums(r):
    one = r / r if not isinstance(r, Fraction) else Fraction(1)
    s0 = one / (1 - r)
    s1 = r / (1 - r) ** 2
    s2 = r * (1 + r) / (1 - r) ** 3
    s3 = r * (1 + 4 * r + r * r) / (1 - r) ** 4
    return (s0, s1, s2, s3)


def power_tail(m: int, a: int, r):
    """Closed form of sum_{k>=a} k^m r^k for m <= 3 and 0 < r < 1.

    Exact for Fraction r; returns the same numeric type as ``r`` otherwise.
    """
    if m not in (0, 1, 2, 3):
        raise ValueError(f"power_tail supports exponents 0..3, got {m}")
    base = _base_sums(r)
    shift = r ** a
    total = 0
    for t in range(m + 1):
        total += comb(m, t) * (a ** (m - t)) * base[t]
    return shift * total


# ---------------------------------------------------------------------------
# degree-potential table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundGrid:
    """Table of potential bounds indexed by (block sensitivity, degree)."""

    d_max: int
    caps: CapProfile
    kind: str  # "degree" | "mixed_ds"
    beta: Fraction | None
    bd: tuple[int, ...]  # cap per degree, index 1..d_max
    rows: tuple[tuple[float, ...], ...]  # rows[d][b], b = 0..bd[d]
    corner: float
    tail_first: float
    tail_series: float
    tail_remainder: float
    headline: float

    def cell(self, b: int, d: int) -> float:
        if not 1 <= d <= self.d_max:
            raise ValueError(f"degree {d} outside table")
        if b < 0:
            raise ValueError("block sensitivity must be >= 0")
        if b > self.bd[d]:
            return 0.0
        return self.rows[d][b]

    def cap_sources(self) -> tuple[str, ...]:
        return tuple(self.caps.source(d) for d in range(1, self.d_max + 1))

    def to_text(self, b_step: int = 1) -> str:
        lines = ["b\\d\t" + "\t".join(str(d) for d in range(1, self.d_max + 1))]
        bmax = max(self.bd[1:])
        for b in range(0, bmax + 1, b_step):
            row = [str(b)]
            for d in range(1, self.d_max + 1):
                row.append(f"{self.cell(b, d):.9f}" if b <= self.bd[d] else "-")
            lines.append("\t".join(row))
        lines.append(f"corner\t{self.corner:.9f}")
        lines.append(f"tail_first\t{self.tail_first:.3e}")
        lines.append(f"tail_series\t{self.tail_series:.3e}")
        lines.append(f"tail_remainder\t{self.tail_remainder:.3e}")
        lines.append(f"headline\t{self.headline:.9f}")
        return "\n".join(lines)


def _mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _uniform_step(d: int, beta: Fraction | None) -> float:
    """One restriction round of a degree-d monomial, flat sens_i >= 2 bound."""
    if beta is None:
        return d * 2.0 ** (-d)
    e = beta * d + 2 * (1 - beta)
    return float(d * mpmath.power(2, -_mpf(e)))


def _profile_step(d: int, beta: Fraction | None) -> float:
    """One restriction round, with the monomial sensitivity profile.

    Within a degree-d monomial at most (k-1)^2 coordinates can have
    sens_i <= k, so the per-round weight sum_{i in M} 2^-(beta d +
    (1-beta) sens_i) is maximised by the staircase profile a_k = 2k-3;
    at beta = 1 this degenerates to the flat d * 2^-d round.
    """
    if beta is None or beta == 1:
        return _uniform_step(d, None if beta is None else beta)
    rho = mpmath.power(2, -(1 - _mpf(beta)))
    root = isqrt(d)
    prof = sum((2 * k - 3) * rho ** k for k in range(2, root + 2))
    prof += (d - root * root) * rho ** (root + 2)
    trivial = d * rho ** 2
    return float(mpmath.power(2, -_mpf(beta) * d) * min(prof, trivial))


def _tail_bounds(
    d_max: int, caps: CapProfile, beta: Fraction | None,
    step: Callable[[int], float],
) -> tuple[float, float, float]:
    """(first term, partial series, remainder bound) past the grid corner.

    The first term relaxes the block-sensitivity cap from the corner to
    B_{d+1} and the series continues upward one degree at a time, each
    relaxation round costing one step at its degree.
    """
    first = caps.bd(d_max + 1) * step(d_max + 1)
    cutoff = max(d_max + 2, 400)
    series = 0.0
    prev = caps.bd(d_max + 1)
    for k in range(d_max + 2, cutoff + 1):
        cur = caps.bd(k)
        series += (cur - prev) * step(k)
        prev = cur
    # every cap mode is dominated by the square profile (differences 2k-1)
    # and every step by the flat k * rho^2 * 2^(-beta k) round
    if beta is None:
        r = Fraction(1, 2)
        rem = 2 * power_tail(2, cutoff + 1, r) - power_tail(1, cutoff + 1, r)
        remainder = float(rem)
    else:
        r = mpmath.power(2, -_mpf(beta))
        amp = mpmath.power(2, -2 * (1 - _mpf(beta)))
        rem = amp * (2 * power_tail(2, cutoff + 1, r) - power_tail(1, cutoff + 1, r))
        remainder = float(rem)
    return first, series, remainder


def _dp_grid(
    d_max: int,
    caps: CapProfile,
    kind: str,
    beta: Fraction | None,
    step_weight: Callable[[int], float],
    cap_value: Callable[[int], float],
) -> BoundGrid:
    if not 2 <= d_max <= 64:
        raise ValueError(f"table supports 2 <= d_max <= 64, got {d_max}")
    bd = [0] + [caps.bd(d) for d in range(1, d_max + 1)]
    rows = [[0.0] * (bd[d] + 1) if d else [0.0] for d in range(d_max + 1)]
    bmax = max(bd[1:])
    steps = [0.0] + [step_weight(d) for d in range(1, d_max + 1)]
    caps_v = [0.0] + [cap_value(d) for d in range(1, d_max + 1)]
    for b in range(1, bmax + 1):
        prefix = 0.0
        for d in range(1, d_max + 1):
            prev = rows[d][b - 1] if b - 1 <= bd[d] else 0.0
            if prev > prefix:
                prefix = prev
            if b <= bd[d]:
                rows[d][b] = min(caps_v[d], steps[d] + prefix)
    corner = rows[d_max][bd[d_max]]
    first, series, remainder = _tail_bounds(d_max, caps, beta, step_weight)
    headline = corner + first + series + remainder
    return BoundGrid(
        d_max=d_max,
        caps=caps,
        kind=kind,
        beta=beta,
        bd=tuple(bd),
        rows=tuple(tuple(r) for r in rows),
        corner=corner,
        tail_first=first,
        tail_series=series,
        tail_remainder=remainder,
        headline=headline,
    )


def dp_degree(d_max: int, caps: CapProfile) -> BoundGrid:
    """Bound table for the degree potential.

    Each cell is min(d/2, d*2^-d + max over lower-degree cells at one less
    block sensitivity); cells beyond the cap are zero, and the headline adds
    the closed-form tail for degrees past the grid.
    """
    return _dp_grid(
        d_max, caps, "degree", None,
        step_weight=lambda d: d * 2.0 ** (-d),
        cap_value=lambda d: d / 2.0,
    )


def dp_mixed_ds(
    beta, d_max: int, caps: CapProfile, step: str = "profile"
) -> BoundGrid:
    """Same crank for the degree/sensitivity mix.

    Coordinates of a top-degree monomial have deg_i = d and sens_i >= 2; the
    influence cap becomes d / 2^(2-beta).  ``step`` selects the per-round
    weight: "profile" (default) applies the monomial sensitivity staircase,
    "uniform" uses the flat d * 2^-(beta d + 2(1-beta)) bound, which is
    strictly weaker (it lands near 8.83 at beta=1/2 instead of 7.6).
    """
    beta = Fraction(beta)
    if not 0 < beta <= 1:
        raise ValueError(f"mixing weight must lie in (0, 1], got {beta}")
    if step not in ("profile", "uniform"):
        raise ValueError(f"unknown step rule {step!r}")
    cap_amp = float(mpmath.power(2, -(2 - _mpf(beta))))
    weight = _profile_step if step == "profile" else _uniform_step
    return _dp_grid(
        d_max, caps, "mixed_ds", beta,
        step_weight=lambda d: weight(d, beta),
        cap_value=lambda d: d * cap_amp,
    )


# ---------------------------------------------------------------------------
# monotone degree recursion (exact rationals)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneDegreeTable:
    values: tuple[Fraction, ...]  # index 1..d_max
    headline: Fraction

    def value(self, d: int) -> Fraction:
        return self.values[d]

    def to_text(self) -> str:
        lines = []
        for d in range(1, len(self.values)):
            v = self.values[d]
            lines.append(f"{d}\t{v.numerator}/{v.denominator}\t{float(v):.9f}")
        h = self.headline
        lines.append(f"headline\t{h.numerator}/{h.denominator}\t{float(h):.9f}")
        return "\n".join(lines)


def dp_monotone_degree(d_max: int) -> MonotoneDegreeTable:
    """Exact recursion for the degree potential of monotone functions.

    From the base 1/2 at degrees 1 and 2, each step takes the best k of
    min(k*2^-k + (1-2^-k)*prev, k*2^-d + prev); the headline adds the exact
    dyadic tail sum_{d>d_max} d/2^d.
    """
    if d_max < 2:
        raise ValueError(f"d_max must be >= 2, got {d_max}")
    vals: list[Fraction] = [Fraction(0), Fraction(1, 2), Fraction(1, 2)]
    for d in range(3, d_max + 1):
        prev = vals[d - 1]
        best = Fraction(0)
        for k in range(1, d + 1):
            wk = Fraction(1, 1 << k)
            wd = Fraction(1, 1 << d)
            cand = min(k * wk + (1 - wk) * prev, k * wd + prev)
            if cand > best:
                best = cand
        vals.append(best)
    tail = power_tail(1, d_max + 1, Fraction(1, 2))
    return MonotoneDegreeTable(tuple(vals), vals[d_max] + tail)


# ---------------------------------------------------------------------------
# mixed-measure closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InfluenceMinimum:
    k: int
    value: float
    profile: tuple[tuple[int, float], ...]  # (k, objective) for the scan


def ds_influence_min(beta, k_max: int = 200) -> InfluenceMinimum:
    """Minimise k/2^(2-beta) + sum_{i>k} i^3 / (2^(2-beta) * 2^(beta i)).

    Evaluated for k = 1..k_max with the cubic tail in closed form at 50
    digits; the returned value is accurate to well below 1e-9.
    """
    beta = Fraction(beta)
    if not 0 < beta <= 1:
        raise ValueError(f"mixing weight must lie in (0, 1], got {beta}")
    bmp = mpmath.mpf(beta.numerator) / beta.denominator
    r = mpmath.power(2, -bmp)
    amp = mpmath.power(2, -(2 - bmp))
    best_k, best_v = None, None
    profile = []
    for k in range(1, k_max + 1):
        v = amp * (k + power_tail(3, k + 1, r))
        profile.append((k, float(v)))
        if best_v is None or v < best_v:
            best_k, best_v = k, v
    return InfluenceMinimum(best_k, float(best_v), tuple(profile))


def cs_harmonic_bound(d: int) -> Fraction:
    """Exact (1/2) * H_d."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return Fraction(1, 2) * sum(Fraction(1, i) for i in range(1, d + 1))


def cs_sens_bound(s: int) -> float:
    """Natural-log form ln(s) + gamma/2 of the certificate/sensitivity bound."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return log(s) + EULER_GAMMA / 2


# ---------------------------------------------------------------------------
# the auxiliary scalar recursion behind the mixed certificate bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecursionVerdict:
    values: tuple[float, ...]  # A_1..A_dmax
    bound_constant: float
    harmonic_bound: bool | None  # A_d <= C*H_d checked when alpha == 1/2
    constant_bound: bool | None  # A_d <= C checked when alpha < 1/2


def technical_recursion(B, alpha, d_max: int) -> RecursionVerdict:
    """Iterate A_{d+1} = max_h (B h alpha^h + (1 - 2^-h) A_d) with equality.

    The maximum over positive integers h is scanned up to the point where
    the drive term drops below 1e-15.  For alpha = 1/2 the verdict checks
    A_d <= C * H_d with C = max(A_1, B / ln 2): relaxing h to reals turns
    B h 2^-h into (B / ln 2) x e^-x, and the harmonic induction runs with
    that rescaled constant (with plain max(A_1, B) the worst-case equality
    iteration provably escapes the bound).  For alpha < 1/2 it checks the
    constant bound C = max(A_1, max_h B h (2 alpha)^h).
    """
    B = float(B)
    alpha_q = Fraction(alpha)
    alpha = float(alpha_q)
    if not (B > 0 and 0 < alpha < 1):
        raise ValueError("need B > 0 and 0 < alpha < 1")
    vals = [B]  # A_1 = B, matching the mixed-certificate base value of 1/2
    for _ in range(1, d_max):
        a_prev = vals[-1]
        best = a_prev
        h = 1
        while True:
            drive = B * h * alpha ** h
            cand = drive + (1 - 2.0 ** (-h)) * a_prev
            if cand > best:
                best = cand
            if drive < 1e-15 and h > 4:
                break
            h += 1
            if h > 4000:
                break
        vals.append(best)
    if alpha_q == Fraction(1, 2):
        C = max(vals[0], B / log(2))
        harm = 0.0
        ok = True
        for d, a in enumerate(vals, start=1):
            harm += 1.0 / d
            if a > C * harm + 1e-9:
                ok = False
                break
        return RecursionVerdict(tuple(vals), C, ok, None)
    if alpha_q < Fraction(1, 2):
        gamma = 2 * alpha
        m = 0.0
        h = 1
        while True:
            t = B * h * gamma ** h
            if t > m:
                m = t
            if t < 1e-15 and h > 4:
                break
            h += 1
            if h > 4000:
                break
        C = max(vals[0], m)
        ok = all(a <= C + 1e-9 for a in vals)
        return RecursionVerdict(tuple(vals), C, None, ok)
    return RecursionVerdict(tuple(vals), max(vals), None, None)


# ---------------------------------------------------------------------------
# monotone decision-tree relevant-variable table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneDtTable:
    values: tuple[int, ...]  # R_0..R_dmax
    ratio: Fraction  # R_dmax / 2^dmax

    def to_text(self) -> str:
        lines = [f"{d}\t{v}" for d, v in enumerate(self.values)]
        lines.append(
            f"ratio\t{self.ratio.numerator}/{self.ratio.denominator}"
            f"\t{float(self.ratio):.9f}"
        )
        return "\n".join(lines)


def monotone_dt_table(d_max: int) -> MonotoneDtTable:
    """Iterate the three-way recursion for relevant variables at fixed depth.

    Starting from 0, 1 the exact integer sequence obeys 2^(d-2) + 2 from
    depth 4 on (asserted), and the headline ratio R_d / 2^d approaches 1/4.
    """
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    R = [0, 1]
    for d in range(2, d_max + 1):
        R.append(max(2 * R[d - 1] - 2, 2 + 2 * R[d - 2], 1 + R[d - 1]))
    for d in range(4, d_max + 1):
        if R[d] != 2 ** (d - 2) + 2:
            raise AssertionError(
                f"closed form failed at depth {d}: {R[d]} != 2^{d - 2} + 2"
            )
    return MonotoneDtTable(tuple(R), Fraction(R[d_max], 1 << d_max))
