"""Truth-table representation of Boolean functions.

A function on ``n`` inputs (coordinates are 1-based, ``1..n``) is stored as a
single Python integer whose bit at index ``sum(x_i * 2**(i-1))`` is ``f(x)``;
coordinate 1 is the least-significant index bit.  All operations are pure and
instances are immutable, so they can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

MAX_ARITY = 20

FAMILY_NAMES = (
    "CONST0",
    "CONST1",
    "DICT",
    "AND",
    "OR",
    "PARITY",
    "MAJ",
    "ADDR",
    "MAF",
    "KUSHILEVITZ",
)


class ArityError(ValueError):
    """Raised when an operation is asked to exceed its exact-mode arity cap."""


# ---------------------------------------------------------------------------
# bit-pattern helpers on packed truth tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def half_mask(n: int, i0: int) -> int:
    """Mask of the 2**n index positions whose index bit ``i0`` is 0."""
    s = 1 << i0
    block = (1 << s) - 1
    width = 2 * s
    total = 1 << n
    m = block
    while width < total:
        m |= m << width
        width <<= 1
    return m


@lru_cache(maxsize=None)
def _merge_mask(n: int, size: int) -> int:
    # pattern: 2*size ones, 2*size zeros, repeated across 2**n bits
    block = (1 << (2 * size)) - 1
    width = 4 * size
    total = 1 << n
    m = block
    while width < total:
        m |= m << width
        width <<= 1
    return m


def restrict_bit(table: int, n: int, i0: int, b: int) -> int:
    """Table of f with 0-based coordinate ``i0`` fixed to ``b`` (arity n-1)."""
    s = 1 << i0
    t = (table >> s) if b else table
    t &= half_mask(n, i0)
    size = s
    top = 1 << (n - 1)
    while size < top:
        t = (t | (t >> size)) & _merge_mask(n, size)
        size <<= 1
    return t


def flip_table(table: int, n: int, i0: int) -> int:
    """Table of x -> f(x with coordinate i0 flipped)."""
    s = 1 << i0
    lo = half_mask(n, i0)
    hi = lo << s
    return ((table & hi) >> s) | ((table & lo) << s)


def diff_mask(table: int, n: int, i0: int) -> int:
    """Bit x is set iff f(x) != f(x^(i0+1))."""
    return table ^ flip_table(table, n, i0)


def popcount(x: int) -> int:
    return x.bit_count()


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartialAssignment:
    """A set of (coordinate, bit) fixings with distinct coordinates."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        pairs = tuple((int(i), int(b)) for i, b in pairs)
        coords = [i for i, _ in pairs]
        if len(set(coords)) != len(coords):
            raise ValueError(f"duplicate coordinates in assignment: {coords}")
        for i, b in pairs:
            if i < 1:
                raise ValueError(f"coordinate {i} out of range")
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b}")
        object.__setattr__(self, "pairs", pairs)

    def coordinates(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.pairs)


def _as_pairs(a) -> tuple[tuple[int, int], ...]:
    if isinstance(a, PartialAssignment):
        return a.pairs
    return PartialAssignment(a).pairs


class BooleanFunction:
    """Explicit truth table of a Boolean function on at most 20 inputs."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table: int):
        if not 0 <= n <= MAX_ARITY:
            raise ArityError(f"arity {n} outside supported range 0..{MAX_ARITY}")
        size = 1 << n
        if not 0 <= table < (1 << size):
            raise ValueError(f"table does not fit in {size} bits")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", table)

    def __setattr__(self, *_):
        raise AttributeError("BooleanFunction is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BooleanFunction":
        size = len(bits)
        n = size.bit_length() - 1
        if size != 1 << n:
            raise ValueError(f"table length {size} is not a power of two")
        table = 0
        for idx, bit in enumerate(bits):
            if bit not in (0, 1):
                raise ValueError(f"table entries must be bits, got {bit!r}")
            table |= bit << idx
        return cls(n, table)

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[tuple[int, ...]], int]) -> "BooleanFunction":
        bits = []
        for idx in range(1 << n):
            x = tuple((idx >> i) & 1 for i in range(n))
            bits.append(int(fn(x)))
        return cls.from_bits(bits)

    # -- basics ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BooleanFunction)
            and self.n == other.n
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.n, self.table))

    def __repr__(self) -> str:
        return f"BooleanFunction(n={self.n}, table=0x{self.table:x})"

    def bits(self) -> tuple[int, ...]:
        t = self.table
        return tuple((t >> i) & 1 for i in range(1 << self.n))

    def bit(self, index: int) -> int:
        return (self.table >> index) & 1

    def evaluate(self, x: Sequence[int]) -> int:
        """Value of f at the given input bits (one per coordinate)."""
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} input bits, got {len(x)}")
        idx = 0
        for i, bit in enumerate(x):
            if bit not in (0, 1):
                raise ValueError(f"input bits must be 0/1, got {bit!r}")
            idx |= bit << i
        return (self.table >> idx) & 1

    def is_constant(self) -> bool:
        size = 1 << self.n
        return self.table == 0 or self.table == (1 << size) - 1

    # -- restriction and structure ------------------------------------------

    def restrict(self, assignment) -> "BooleanFunction":
        """Fix some coordinates; survivors are renumbered preserving order."""
        pairs = _as_pairs(assignment)
        for i, _ in pairs:
            if i > self.n:
                raise ValueError(f"coordinate {i} out of range for arity {self.n}")
        table, n = self.table, self.n
        for i, b in sorted(pairs, reverse=True):
            table = restrict_bit(table, n, i - 1, b)
            n -= 1
        return BooleanFunction(n, table)

    def relevant_variables(self) -> frozenset[int]:
        return frozenset(
            i + 1 for i in range(self.n) if diff_mask(self.table, self.n, i)
        )

    def num_relevant(self) -> int:
        return len(self.relevant_variables())

    def is_monotone(self) -> bool:
        """True iff raising any single input bit never lowers the output."""
        for i in range(self.n):
            lo = half_mask(self.n, i)
            a = self.table & lo
            b = (self.table >> (1 << i)) & lo
            if a & ~b:
                return False
        return True

    def compose(self, g: "BooleanFunction") -> "BooleanFunction":
        """Substitute an independent copy of ``g`` for each input of self."""
        k, m = self.n, g.n
        if k * m > MAX_ARITY:
            raise ArityError(f"composed arity {k * m} exceeds {MAX_ARITY}")
        gm = (1 << m) - 1
        gt, ft = g.table, self.table
        table = 0
        for z in range(1 << (k * m)):
            idx = 0
            for i in range(k):
                idx |= ((gt >> ((z >> (i * m)) & gm)) & 1) << i
            table |= ((ft >> idx) & 1) << z
        return BooleanFunction(k * m, table)

    # -- transforms ----------------------------------------------------------

    def mobius_transform(self) -> "MultilinearPolynomial":
        """Multilinear expansion over the {0,1} cube (integer coefficients)."""
        coeffs = mobius_vector(self.n, self.table)
        return MultilinearPolynomial(
            self.n,
            "01",
            {m: Fraction(c) for m, c in enumerate(coeffs) if c},
        )

    def fourier_transform(self) -> "MultilinearPolynomial":
        """Expansion in the ±1 convention (input/output 0 -> +1, 1 -> -1)."""
        w = fourier_vector(self.n, self.table)
        scale = Fraction(1, 1 << self.n)
        return MultilinearPolynomial(
            self.n,
            "pm",
            {m: c * scale for m, c in enumerate(w) if c},
        )

    # -- file format ---------------------------------------------------------

    def to_tt(self) -> str:
        bits = "".join(str(b) for b in self.bits())
        return f"n={self.n}\n{bits}\n"

    @classmethod
    def from_tt(cls, text: str) -> "BooleanFunction":
        lines = text.splitlines()
        if len(lines) < 2 or not lines[0].startswith("n="):
            raise ValueError("truth-table text must start with an 'n=<arity>' line")
        n = int(lines[0][2:])
        bits = lines[1].strip()
        if len(bits) != 1 << n:
            raise ValueError(f"expected {1 << n} table bits, got {len(bits)}")
        if set(bits) - {"0", "1"}:
            raise ValueError("table line may contain only 0 and 1")
        return cls(n, int(bits[::-1], 2) if bits else 0)


def mobius_vector(n: int, table: int) -> list[int]:
    """Integer monomial coefficients of f over {0,1}, indexed by subset mask."""
    v = [(table >> x) & 1 for x in range(1 << n)]
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                v[m] -= v[m ^ bit]
    return v


def fourier_vector(n: int, table: int) -> list[int]:
    """2**n times the Fourier coefficients, via the Walsh-Hadamard transform."""
    v = [1 - 2 * ((table >> x) & 1) for x in range(1 << n)]
    for i in range(n):
        bit = 1 << i
        for m in range(1 << n):
            if m & bit:
                a, b = v[m ^ bit], v[m]
                v[m ^ bit], v[m] = a + b, a - b
    return v


def degree_of_vector(coeffs: Sequence[int]) -> int:
    deg = 0
    for m, c in enumerate(coeffs):
        if c:
            deg = max(deg, popcount(m))
    return deg


class MultilinearPolynomial:
    """Map from coordinate subsets to exact rational coefficients.

    ``basis`` is "01" for the monomial expansion over {0,1} inputs and "pm"
    for the Fourier expansion in the ±1 convention.
    """

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n: int, basis: str, coeffs: dict[int, Fraction]):
        if basis not in ("01", "pm"):
            raise ValueError(f"unknown basis {basis!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(
            self, "coeffs", {m: Fraction(c) for m, c in coeffs.items() if c}
        )

    def __setattr__(self, *_):
        raise AttributeError("MultilinearPolynomial is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultilinearPolynomial)
            and self.n == other.n
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.basis, tuple(sorted(self.coeffs.items()))))

    def degree(self) -> int:
        return max((popcount(m) for m in self.coeffs), default=0)

    def coefficient(self, subset: Iterable[int]) -> Fraction:
        mask = 0
        for i in subset:
            mask |= 1 << (i - 1)
        return self.coeffs.get(mask, Fraction(0))

    def support(self) -> list[frozenset[int]]:
        return [
            frozenset(i + 1 for i in range(self.n) if m >> i & 1)
            for m in self.coeffs
        ]

    def evaluate(self, x: Sequence[int]) -> Fraction:
        """Value at a {0,1} point (01 basis) or ±1 point (pm basis)."""
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} inputs")
        total = Fraction(0)
        if self.basis == "01":
            supp = 0
            for i, bit in enumerate(x):
                if bit:
                    supp |= 1 << i
            for m, c in self.coeffs.items():
                if m & ~supp == 0:
                    total += c
        else:
            for m, c in self.coeffs.items():
                sign = 1
                for i in range(self.n):
                    if m >> i & 1 and x[i] < 0:
                        sign = -sign
                total += c * sign
        return total

    def restrict(self, assignment) -> "MultilinearPolynomial":
        """Symbolic substitution of fixed {0,1} values (01 basis only)."""
        if self.basis != "01":
            raise ValueError("restrict is defined on the 01 basis")
        pairs = _as_pairs(assignment)
        coeffs = dict(self.coeffs)
        for i, b in sorted(pairs, reverse=True):
            bit = 1 << (i - 1)
            above = ~((bit << 1) - 1)
            new: dict[int, Fraction] = {}
            for m, c in coeffs.items():
                if m & bit:
                    if not b:
                        continue
                    m = m ^ bit
                nm = (m & (bit - 1)) | ((m & above) >> 1)
                new[nm] = new.get(nm, Fraction(0)) + c
            coeffs = {m: c for m, c in new.items() if c}
        return MultilinearPolynomial(self.n - len(pairs), self.basis, coeffs)

    def format_lines(self) -> list[str]:
        """One line per monomial: ``S=<indices|empty>  c=<num>/<den>``."""
        entries = []
        for m, c in self.coeffs.items():
            coords = tuple(i + 1 for i in range(self.n) if m >> i & 1)
            entries.append((len(coords), coords, c))
        entries.sort(key=lambda e: (e[0], e[1]))
        lines = []
        for _, coords, c in entries:
            name = ",".join(str(i) for i in coords) if coords else "empty"
            lines.append(f"S={name}  c={c.numerator}/{c.denominator}")
        return lines


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

# the 6-variable cubic separating block sensitivity from degree; the ten cubic
# monomials carry coefficient +1, every pair -1, every singleton +1
_KUSHILEVITZ_CUBICS = (
    (1, 3, 4), (1, 2, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5),
    (1, 2, 6), (1, 3, 6), (2, 4, 6), (3, 5, 6), (4, 5, 6),
)


def _kushilevitz_value(x: Sequence[int]) -> int:
    total = sum(x)
    for i, j in itertools.combinations(range(6), 2):
        total -= x[i] * x[j]
    for a, b, c in _KUSHILEVITZ_CUBICS:
        total += x[a - 1] * x[b - 1] * x[c - 1]
    return total


def kushilevitz_polynomial() -> MultilinearPolynomial:
    """The defining degree-3 expansion, independent of the truth table."""
    coeffs: dict[int, Fraction] = {}
    for i in range(6):
        coeffs[1 << i] = Fraction(1)
    for i, j in itertools.combinations(range(6), 2):
        coeffs[(1 << i) | (1 << j)] = Fraction(-1)
    for a, b, c in _KUSHILEVITZ_CUBICS:
        coeffs[(1 << (a - 1)) | (1 << (b - 1)) | (1 << (c - 1))] = Fraction(1)
    return MultilinearPolynomial(6, "01", coeffs)


def family(name: str, k: int | None = None) -> BooleanFunction:
    """Construct a named family member; ``k`` is the single size parameter."""
    name = name.upper()
    if name not in FAMILY_NAMES:
        raise ValueError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")

    if name == "KUSHILEVITZ":
        if k is not None:
            raise ValueError("KUSHILEVITZ takes no parameter")
        bits = []
        for idx in range(64):
            x = tuple((idx >> i) & 1 for i in range(6))
            v = _kushilevitz_value(x)
            if v not in (0, 1):
                raise ValueError(
                    f"KUSHILEVITZ polynomial evaluated to {v} at {x}; not Boolean"
                )
            bits.append(v)
        return BooleanFunction.from_bits(bits)

    if k is None:
        raise ValueError(f"family {name} requires a size parameter")
    if name in ("CONST0", "CONST1"):
        if not 0 <= k <= MAX_ARITY:
            raise ArityError(f"arity {k} out of range")
        size = 1 << k
        return BooleanFunction(k, 0 if name == "CONST0" else (1 << size) - 1)
    if name == "DICT":
        if not 1 <= k <= MAX_ARITY:
            raise ArityError(f"arity {k} out of range")
        table = 0
        for idx in range(1 << k):
            if idx & 1:
                table |= 1 << idx
        return BooleanFunction(k, table)
    if name == "AND":
        if not 1 <= k <= MAX_ARITY:
            raise ArityError(f"arity {k} out of range")
        return BooleanFunction(k, 1 << ((1 << k) - 1))
    if name == "OR":
        if not 1 <= k <= MAX_ARITY:
            raise ArityError(f"arity {k} out of range")
        size = 1 << k
        return BooleanFunction(k, ((1 << size) - 1) & ~1)
    if name == "PARITY":
        if not 1 <= k <= MAX_ARITY:
            raise ArityError(f"arity {k} out of range")
        table = 0
        for idx in range(1 << k):
            if popcount(idx) & 1:
                table |= 1 << idx
        return BooleanFunction(k, table)
    if name == "MAJ":
        if k % 2 == 0 or not 1 <= k <= MAX_ARITY:
            raise ValueError("MAJ requires odd arity within the cap")
        table = 0
        for idx in range(1 << k):
            if popcount(idx) > k // 2:
                table |= 1 << idx
        return BooleanFunction(k, table)
    if name == "ADDR":
        n = k + (1 << k)
        if k < 1 or n > MAX_ARITY:
            raise ArityError(f"ADDR with k={k} needs arity {n}")
        table = 0
        amask = (1 << k) - 1
        for idx in range(1 << n):
            a = idx & amask
            if (idx >> (k + a)) & 1:
                table |= 1 << idx
        return BooleanFunction(n, table)
    # MAF: majority of k selectors, or some half-size selector set fully on
    # together with its dedicated target bit
    import math

    if k % 2 == 0 or k < 1:
        raise ValueError("MAF requires odd k >= 1")
    subsets = list(itertools.combinations(range(1, k + 1), k // 2))
    n = k + len(subsets)
    if n > MAX_ARITY:
        raise ArityError(f"MAF with k={k} needs arity {n} > {MAX_ARITY}")
    assert len(subsets) == math.comb(k, k // 2)
    table = 0
    for idx in range(1 << n):
        sel = idx & ((1 << k) - 1)
        if popcount(sel) > k // 2:
            table |= 1 << idx
            continue
        for j, subset in enumerate(subsets):
            if all(sel >> (i - 1) & 1 for i in subset) and (idx >> (k + j)) & 1:
                table |= 1 << idx
                break
    return BooleanFunction(n, table)


def maf_target_subsets(k: int) -> list[tuple[int, ...]]:
    """Selector subsets indexing the targets of MAF_k, in coordinate order."""
    return list(itertools.combinations(range(1, k + 1), k // 2))
