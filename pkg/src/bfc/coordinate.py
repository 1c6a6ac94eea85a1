"""Per-coordinate restriction-reducing measures and their potentials.

Each coordinate measure vanishes on coordinates the function ignores, never
grows under restriction of another coordinate, and drops by at least one on
the surviving branch whenever the other branch kills the coordinate.  The
potential of a function sums 2**(-m_i) over its relevant coordinates; with
integer exponents these sums are exact rationals, while mixed measures with
fractional exponents are evaluated as 50-digit reals carrying a stated
error bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .bf import (
    ArityError,
    BooleanFunction,
    degree_of_vector,
    restrict_bit,
)
from .measures import (
    _diffs,
    _fourier,
    _influence_counts,
    _mobius,
    _point_certificates,
    _point_sensitivity,
    _sensitivity,
)

mpmath.mp.dps = 50

MIXED_ERROR_BOUND = 1e-12
MONOMIAL_CHECK_MAX_ARITY = 10

# zeta(2); junta-count constant sum_{j>=1} j/j**3
_SUM_INV_SQUARES = float(mpmath.zeta(2))


@dataclass(frozen=True)
class CoordinateMeasureKind:
    """One of the coordinate measures: deg_i, sens_i, cert_i, or a convex mix."""

    tag: str  # "deg" | "sens" | "cert" | "mix_ds" | "mix_cs"
    beta: Fraction | None = None

    def __post_init__(self):
        if self.tag in ("deg", "sens", "cert"):
            if self.beta is not None:
                raise ValueError(f"{self.tag} takes no mixing weight")
        elif self.tag in ("mix_ds", "mix_cs"):
            if self.beta is None or not 0 <= self.beta <= 1:
                raise ValueError("mixing weight must lie in [0, 1]")
        else:
            raise ValueError(f"unknown coordinate measure {self.tag!r}")

    def label(self) -> str:
        if self.beta is None:
            return self.tag
        return f"{self.tag}({self.beta})"


DEG_I = CoordinateMeasureKind("deg")
SENS_I = CoordinateMeasureKind("sens")
CERT_I = CoordinateMeasureKind("cert")


def mix_ds(beta) -> CoordinateMeasureKind:
    return CoordinateMeasureKind("mix_ds", Fraction(beta))


def mix_cs(beta) -> CoordinateMeasureKind:
    return CoordinateMeasureKind("mix_cs", Fraction(beta))


ALL_BASE_KINDS = (DEG_I, SENS_I, CERT_I)
STANDARD_KINDS = ALL_BASE_KINDS + (mix_ds(Fraction(1, 2)), mix_cs(Fraction(1, 2)))


# ---------------------------------------------------------------------------
# coordinate measure kernels on (n, table)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1 << 17)
def _deg_i_all(n: int, table: int) -> tuple[int, ...]:
    """Degree of f(x) - f(x^i) for each coordinate (0 when irrelevant)."""
    out = []
    diffs = _diffs(n, table)
    for i in range(n):
        if not diffs[i]:
            out.append(0)
            continue
        bit = 1 << i
        g = [((table >> x) & 1) - ((table >> (x ^ bit)) & 1) for x in range(1 << n)]
        for j in range(n):
            bj = 1 << j
            for m in range(1 << n):
                if m & bj:
                    g[m] -= g[m ^ bj]
        out.append(degree_of_vector(g))
    return tuple(out)


@lru_cache(maxsize=1 << 17)
def _sens_i_all(n: int, table: int) -> tuple[int, ...]:
    """max over sensitive edges of s_x + s_{x^i}, per coordinate."""
    sx = _point_sensitivity(n, table)
    out = []
    for i, d in enumerate(_diffs(n, table)):
        bit = 1 << i
        best = 0
        while d:
            low = d & -d
            x = low.bit_length() - 1
            v = sx[x] + sx[x ^ bit]
            if v > best:
                best = v
            d ^= low
        out.append(best)
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _cert_i_all(n: int, table: int) -> tuple[int, ...]:
    """max over sensitive edges of C_x + C_{x^i}, per coordinate."""
    cx = _point_certificates(n, table)
    out = []
    for i, d in enumerate(_diffs(n, table)):
        bit = 1 << i
        best = 0
        while d:
            low = d & -d
            x = low.bit_length() - 1
            v = cx[x] + cx[x ^ bit]
            if v > best:
                best = v
            d ^= low
        out.append(best)
    return tuple(out)


def _kind_values(n: int, table: int, kind: CoordinateMeasureKind) -> tuple[Fraction, ...]:
    if kind.tag == "deg":
        return tuple(Fraction(v) for v in _deg_i_all(n, table))
    if kind.tag == "sens":
        return tuple(Fraction(v) for v in _sens_i_all(n, table))
    if kind.tag == "cert":
        return tuple(Fraction(v) for v in _cert_i_all(n, table))
    beta = kind.beta
    if kind.tag == "mix_ds":
        first, second = _deg_i_all(n, table), _sens_i_all(n, table)
    else:
        first, second = _cert_i_all(n, table), _sens_i_all(n, table)
    return tuple(beta * a + (1 - beta) * b for a, b in zip(first, second))


def deg_i(f: BooleanFunction, i: int) -> int:
    _check_coord(f, i)
    return _deg_i_all(f.n, f.table)[i - 1]


def sens_i(f: BooleanFunction, i: int) -> int:
    _check_coord(f, i)
    return _sens_i_all(f.n, f.table)[i - 1]


def cert_i(f: BooleanFunction, i: int) -> int:
    _check_coord(f, i)
    return _cert_i_all(f.n, f.table)[i - 1]


def coordinate_measure(f: BooleanFunction, i: int, kind: CoordinateMeasureKind) -> Fraction:
    _check_coord(f, i)
    return _kind_values(f.n, f.table, kind)[i - 1]


def _check_coord(f: BooleanFunction, i: int) -> None:
    if not 1 <= i <= f.n:
        raise ValueError(f"coordinate {i} out of range for arity {f.n}")


# ---------------------------------------------------------------------------
# potentials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PotentialValue:
    """Sum of 2**(-m_i) over relevant coordinates, with per-term breakdown."""

    kind: CoordinateMeasureKind
    terms: tuple[tuple[int, Fraction, object], ...]  # (coordinate, m_i, weight)
    value: object  # Fraction when exact, float otherwise
    exact: bool
    error_bound: float  # 0.0 for exact values

    def value_as_float(self) -> float:
        return float(self.value)

    def format_lines(self) -> list[str]:
        lines = []
        for coord, m, term in self.terms:
            m_txt = f"{m.numerator}/{m.denominator}"
            if isinstance(term, Fraction):
                t_txt = f"{term.numerator}/{term.denominator}"
            else:
                t_txt = f"{float(term):.15g}"
            lines.append(f"{coord}\t{m_txt}\t{t_txt}")
        if isinstance(self.value, Fraction):
            v_txt = f"{self.value.numerator}/{self.value.denominator}"
        else:
            v_txt = f"{float(self.value):.15g}"
        lines.append(f"total\t{v_txt}")
        return lines


def _term_weight(m: Fraction):
    if m.denominator == 1:
        return Fraction(1, 2 ** m.numerator) if m >= 0 else Fraction(2 ** -m.numerator)
    return mpmath.power(2, -mpmath.mpf(m.numerator) / m.denominator)


def _potential_over(
    f: BooleanFunction, kind: CoordinateMeasureKind, coords: Sequence[int]
) -> PotentialValue:
    n, table = f.n, f.table
    values = _kind_values(n, table, kind)
    diffs = _diffs(n, table)
    terms = []
    all_int = True
    for i in coords:
        if not diffs[i - 1]:
            continue  # irrelevant coordinates contribute nothing
        m = values[i - 1]
        if m.denominator != 1:
            all_int = False
        terms.append((i, m, _term_weight(m)))
    if all_int:
        total = sum((t for _, _, t in terms), Fraction(0))
        return PotentialValue(kind, tuple(terms), total, True, 0.0)
    total = mpmath.mpf(0)
    for _, _, t in terms:
        total += t if not isinstance(t, Fraction) else mpmath.mpf(t.numerator) / t.denominator
    return PotentialValue(kind, tuple(terms), float(total), False, MIXED_ERROR_BOUND)


def potential(f: BooleanFunction, kind: CoordinateMeasureKind) -> PotentialValue:
    return _potential_over(f, kind, range(1, f.n + 1))


def restricted_potential(
    f: BooleanFunction, kind: CoordinateMeasureKind, coords: Iterable[int]
) -> PotentialValue:
    coords = sorted(set(coords))
    for i in coords:
        _check_coord(f, i)
    return _potential_over(f, kind, coords)


# ---------------------------------------------------------------------------
# axioms and structural checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    passed: bool
    detail: str = ""
    counterexample: tuple | None = None


def _restriction_index(i0: int, j0: int) -> int:
    """Index of old coordinate i0 after coordinate j0 is removed (0-based)."""
    return i0 - 1 if i0 > j0 else i0


def check_rrcm(f: BooleanFunction, i: int, kind: CoordinateMeasureKind) -> CheckResult:
    """Verify both restriction-reducing axioms for coordinate ``i``.

    For every other coordinate j and branch bit b: (1) the measure never
    grows when j is fixed; (2) if the j=b branch makes i irrelevant while i
    matters for f, the other branch's measure drops by at least one.
    Returns the first violating (j, b) in lexicographic order.
    """
    n, table = f.n, f.table
    _check_coord(f, i)
    i0 = i - 1
    m_f = _kind_values(n, table, kind)[i0]
    delta_f = 1 if _diffs(n, table)[i0] else 0
    for j in range(1, n + 1):
        if j == i:
            continue
        j0 = j - 1
        sub_tables = [restrict_bit(table, n, j0, b) for b in (0, 1)]
        ii = _restriction_index(i0, j0)
        sub_m = []
        sub_delta = []
        for t in sub_tables:
            sub_m.append(_kind_values(n - 1, t, kind)[ii])
            sub_delta.append(1 if _diffs(n - 1, t)[ii] else 0)
        for b in (0, 1):
            if sub_m[b] > m_f:
                return CheckResult(
                    False,
                    f"measure grew from {m_f} to {sub_m[b]} fixing x{j}={b}",
                    (j, b),
                )
            if delta_f and not sub_delta[b] and sub_m[1 - b] > m_f - 1:
                return CheckResult(
                    False,
                    f"surviving branch x{j}={1 - b} kept measure {sub_m[1 - b]} > {m_f} - 1",
                    (j, b),
                )
    return CheckResult(True)


def check_restriction_inequality(
    f: BooleanFunction,
    i: int,
    kind: CoordinateMeasureKind,
    coords: Iterable[int],
) -> CheckResult:
    """delta_i * 2^-m_i never beats its average over restrictions of ``coords``."""
    H = sorted(set(coords))
    _check_coord(f, i)
    if i in H:
        raise ValueError(f"coordinate {i} must not belong to the restricted set")
    for j in H:
        _check_coord(f, j)

    def side_value(g: BooleanFunction, coord: int):
        vals = _kind_values(g.n, g.table, kind)
        if not _diffs(g.n, g.table)[coord - 1]:
            return Fraction(0)
        return _term_weight(vals[coord - 1])

    lhs = side_value(f, i)
    total = None
    exact = isinstance(lhs, Fraction)
    for bits in range(1 << len(H)):
        g = f.restrict([(j, (bits >> t) & 1) for t, j in enumerate(H)])
        shift = sum(1 for j in H if j < i)
        v = side_value(g, i - shift)
        if not isinstance(v, Fraction):
            exact = False
        total = v if total is None else total + v
    count = 1 << len(H)
    if exact:
        ok = lhs * count <= total
        detail = f"{lhs} vs average {Fraction(total, count)}"
    else:
        lhs_f = float(lhs) if isinstance(lhs, Fraction) else float(lhs)
        rhs_f = float(total) / count
        ok = lhs_f <= rhs_f + MIXED_ERROR_BOUND
        detail = f"{lhs_f} vs average {rhs_f}"
    return CheckResult(ok, detail)


@lru_cache(maxsize=None)
def _dictator_floor(kind: CoordinateMeasureKind) -> Fraction:
    """min of the measure over the two one-variable non-constants.

    Recomputed from the DICT family as a guard against convention drift; the
    expected hard values are deg: 1, sens: 2, cert: 2 and their mixes.
    """
    from .bf import family

    dict1 = family("DICT", 1)
    neg = BooleanFunction(1, dict1.table ^ 0b11)
    vals = [
        _kind_values(1, dict1.table, kind)[0],
        _kind_values(1, neg.table, kind)[0],
    ]
    r = min(vals)
    if kind.tag == "deg":
        expected = Fraction(1)
    elif kind.tag in ("sens", "cert"):
        expected = Fraction(2)
    elif kind.tag == "mix_ds":
        expected = kind.beta * 1 + (1 - kind.beta) * 2
    else:
        expected = kind.beta * 2 + (1 - kind.beta) * 2
    if r != expected:
        raise AssertionError(
            f"dictator floor self-check failed for {kind.label()}: {r} != {expected}"
        )
    return r


def check_influence_bound(f: BooleanFunction, kind: CoordinateMeasureKind) -> CheckResult:
    """Per-coordinate weight <= 2^-r * Inf_i, and in sum for the potential.

    ``r`` is the dictator floor of the measure.  With integer exponents both
    sides are compared exactly as scaled integers.
    """
    n, table = f.n, f.table
    r = _dictator_floor(kind)
    values = _kind_values(n, table, kind)
    diffs = _diffs(n, table)
    counts = _influence_counts(n, table)
    scale = 1 << n
    for i0 in range(n):
        if not diffs[i0]:
            continue
        m = values[i0]
        if m.denominator == 1 and r.denominator == 1:
            # 2^-m <= 2^-r * cnt/2^n  <=>  2^(n + r) <= cnt * 2^m
            if (1 << (n + r.numerator)) > counts[i0] * (1 << m.numerator):
                return CheckResult(
                    False, f"coordinate {i0 + 1}: 2^-{m} > 2^-{r} * {counts[i0]}/{scale}"
                )
        else:
            lhs = float(_term_weight(m))
            rhs = float(_term_weight(r)) * counts[i0] / scale
            if lhs > rhs + MIXED_ERROR_BOUND:
                return CheckResult(False, f"coordinate {i0 + 1}: {lhs} > {rhs}")
    pot = _potential_over(f, kind, range(1, n + 1))
    total_inf = Fraction(sum(counts), scale)
    if pot.exact and r.denominator == 1:
        ok = pot.value <= Fraction(1, 2 ** r.numerator) * total_inf
    else:
        ok = float(pot.value) <= float(_term_weight(r)) * float(total_inf) + MIXED_ERROR_BOUND
    if not ok:
        return CheckResult(False, f"potential {pot.value} exceeds 2^-{r} * I[f]")
    return CheckResult(True)


def check_monomial_sensitivity(f: BooleanFunction, k: int) -> CheckResult:
    """In every monomial (either basis), at most (k-1)^2 coordinates have
    sens_i <= k."""
    n, table = f.n, f.table
    if n > MONOMIAL_CHECK_MAX_ARITY:
        raise ArityError(
            f"monomial sensitivity check supports arity <= {MONOMIAL_CHECK_MAX_ARITY}"
        )
    sens = _sens_i_all(n, table)
    limit = (k - 1) ** 2
    mob = _mobius(n, table)
    four = _fourier(n, table)
    for name, vec in (("monomial", mob), ("spectral", four)):
        for mask in range(1 << n):
            if not vec[mask]:
                continue
            cnt = 0
            mm = mask
            while mm:
                low = mm & -mm
                if sens[low.bit_length() - 1] <= k:
                    cnt += 1
                mm ^= low
            if cnt > limit:
                return CheckResult(
                    False,
                    f"{name} mask {mask:#x}: {cnt} coordinates with sens_i <= {k} "
                    f"exceeds {limit}",
                    (name, mask),
                )
    return CheckResult(True)


def check_junta_count(f: BooleanFunction, k: int) -> CheckResult:
    """Relevant coordinates with sens_i <= k number at most C_v * k^3 * 2^k."""
    n, table = f.n, f.table
    sens = _sens_i_all(n, table)
    diffs = _diffs(n, table)
    cnt = sum(
        1 for i in range(n) if diffs[i] and sens[i] <= k
    )
    bound = _SUM_INV_SQUARES * (k ** 3) * (2 ** k)
    return CheckResult(
        cnt <= bound, f"{cnt} low-sensitivity coordinates vs bound {bound:.6f}"
    )


@dataclass(frozen=True)
class SplitBoundResult:
    hypothesis_holds: bool
    bound_holds: bool | None
    detail: str = ""


def check_split_bound(f: BooleanFunction, coords: Iterable[int]) -> SplitBoundResult:
    """If no input sees two sensitive coordinates from Y, then |Y| < 4^s."""
    Y = sorted(set(coords))
    rel = f.relevant_variables()
    if not set(Y) <= rel:
        raise ValueError(f"{set(Y) - rel} are not relevant coordinates")
    n, table = f.n, f.table
    diffs = _diffs(n, table)
    masks = [diffs[i - 1] for i in Y]
    for x in range(1 << n):
        cnt = 0
        for d in masks:
            if (d >> x) & 1:
                cnt += 1
                if cnt > 1:
                    return SplitBoundResult(
                        False, None, f"input {x:#x} has two sensitive coordinates in Y"
                    )
    s = _sensitivity(n, table)[0]
    ok = len(Y) < 4 ** s
    return SplitBoundResult(True, ok, f"|Y|={len(Y)} vs 4^{s}")
