"""Corpora of Boolean functions for exhaustive and randomised sweeps."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .bf import BooleanFunction, family

# number of monotone functions per arity, used as a generation cross-check
DEDEKIND = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168, 5: 7581}

MONOTONE_ENUM_MAX_ARITY = 5


@lru_cache(maxsize=None)
def _monotone_tables(n: int) -> tuple[int, ...]:
    """All monotone truth tables on n inputs, as sorted packed integers.

    A function is monotone iff both halves along the top coordinate are
    monotone and the low half is pointwise below the high half.
    """
    if n > MONOTONE_ENUM_MAX_ARITY:
        raise ValueError(
            f"monotone enumeration supports n <= {MONOTONE_ENUM_MAX_ARITY}, got {n}"
        )
    if n == 0:
        return (0, 1)
    prev = _monotone_tables(n - 1)
    half = 1 << (n - 1)
    out = []
    for lo in prev:
        for hi in prev:
            if lo & ~hi == 0:  # lo <= hi pointwise
                out.append(lo | (hi << half))
    out.sort()
    if len(out) != DEDEKIND[n]:
        raise AssertionError(
            f"monotone count mismatch at n={n}: {len(out)} != {DEDEKIND[n]}"
        )
    return tuple(out)


def enumerate_monotone(n: int) -> "Corpus":
    return Corpus(kind="monotone", n=n)


def _parse_named(item: str) -> tuple[str, BooleanFunction]:
    if ":" in item:
        name, k = item.split(":", 1)
        f = family(name, int(k))
        return f"{name.upper()}:{k}", f
    return item.upper(), family(item)


@dataclass(frozen=True)
class Corpus:
    """A deterministic iterable of labelled functions.

    Kinds: ``all`` (every function of arity n), ``monotone`` (exactly the
    monotone ones), ``random`` (reproducible from the seed), ``named``.
    """

    kind: str
    n: int = 0
    count: int = 0
    seed: int = 0
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in ("all", "monotone", "random", "named"):
            raise ValueError(f"unknown corpus kind {self.kind!r}")
        if self.kind == "monotone" and self.n > MONOTONE_ENUM_MAX_ARITY:
            raise ValueError(
                f"monotone corpus supports n <= {MONOTONE_ENUM_MAX_ARITY}"
            )

    def __len__(self) -> int:
        if self.kind == "all":
            return 1 << (1 << self.n)
        if self.kind == "monotone":
            return DEDEKIND[self.n]
        if self.kind == "random":
            return self.count
        return len(self.names)

    def __iter__(self) -> Iterator[tuple[str, BooleanFunction]]:
        if self.kind == "all":
            size = 1 << self.n
            for t in range(1 << size):
                yield f"all{self.n}:0x{t:x}", BooleanFunction(self.n, t)
        elif self.kind == "monotone":
            for t in _monotone_tables(self.n):
                yield f"mono{self.n}:0x{t:x}", BooleanFunction(self.n, t)
        elif self.kind == "random":
            rng = random.Random(self.seed)
            size = 1 << self.n
            for i in range(self.count):
                t = rng.getrandbits(size)
                yield f"rand{self.n}:{i}:0x{t:x}", BooleanFunction(self.n, t)
        else:
            for item in self.names:
                label, f = _parse_named(item)
                yield label, f

    def describe(self) -> str:
        if self.kind == "all":
            return f"all:{self.n}"
        if self.kind == "monotone":
            return f"monotone:{self.n}"
        if self.kind == "random":
            return f"random:{self.n}:{self.count}:{self.seed}"
        return "named:" + ",".join(self.names)


def parse_corpus(spec: str) -> Corpus:
    """Parse ``all:N``, ``monotone:N``, ``random:N:COUNT:SEED``, ``named:L``."""
    kind, _, rest = spec.partition(":")
    kind = kind.lower()
    if kind == "all":
        return Corpus(kind="all", n=int(rest))
    if kind == "monotone":
        return Corpus(kind="monotone", n=int(rest))
    if kind == "random":
        parts = rest.split(":")
        if len(parts) != 3:
            raise ValueError("random corpus needs N:COUNT:SEED")
        return Corpus(
            kind="random", n=int(parts[0]), count=int(parts[1]), seed=int(parts[2])
        )
    if kind == "named":
        names = tuple(s.strip() for s in rest.split(",") if s.strip())
        if not names:
            raise ValueError("named corpus needs at least one family")
        return Corpus(kind="named", names=names)
    raise ValueError(f"unknown corpus spec {spec!r}")


def random_monotone(n: int, count: int, seed: int) -> list[BooleanFunction]:
    """Biased monotone sampler: random table, then upward closure.

    Each sampled table is ORed upward along every coordinate until stable,
    which overweights functions with small upper shadows; fine for property
    testing, not a uniform sampler.
    """
    rng = random.Random(seed)
    out = []
    size = 1 << n
    for _ in range(count):
        t = rng.getrandbits(size)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                shift = 1 << i
                from .bf import half_mask

                lo = half_mask(n, i)
                up = (t & lo) << shift
                if up & ~t:
                    t |= up
                    changed = True
        out.append(BooleanFunction(n, t))
    return out
