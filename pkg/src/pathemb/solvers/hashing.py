"""The modular hash family h_{p,q}(m) = (q*m mod p) mod r used for colour coding."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import ceil, comb, log2

from sympy import primerange

# subsets * hashes above this are not checked exhaustively; such n are
# taken as "sufficiently large" for the family to be perfect
EXHAUSTIVE_BUDGET = 2_000_000


@dataclass(frozen=True)
class HashAssignment:
    p: int
    q: int
    range_size: int

    def __call__(self, m: int) -> int:
        return (self.q * m % self.p) % self.range_size


def prime_limit(n: int, range_size: int, multiplier: float = 1.0) -> int:
    """Exclusive upper bound on p: range_size * ceil(log2 n), scaled by ``multiplier``."""
    return int(multiplier * range_size * ceil(log2(n)))


@lru_cache(maxsize=None)
def _primes_below(limit: int) -> tuple[int, ...]:
    return tuple(primerange(2, limit))


def enumerate_hashes(n: int, range_size: int, multiplier: float = 1.0) -> Iterator[HashAssignment]:
    """All (p, q) with p prime below :func:`prime_limit` and 0 <= q < p, in increasing order."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if range_size < 1:
        raise ValueError("range_size must be positive")
    for p in _primes_below(prime_limit(n, range_size, multiplier)):
        for q in range(p):
            yield HashAssignment(p, q, range_size)


def find_injective(
    subset: Iterable[int], n: int, range_size: int, multiplier: float = 1.0
) -> HashAssignment | None:
    """First member of the family that is injective on ``subset``, if any."""
    subset = list(subset)
    for h in enumerate_hashes(n, range_size, multiplier):
        if len({h(m) for m in subset}) == len(subset):
            return h
    return None


@lru_cache(maxsize=256)
def _value_table(n: int, range_size: int, multiplier: float) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(h(m) for m in range(1, n + 1)) for h in enumerate_hashes(n, range_size, multiplier)
    )


@lru_cache(maxsize=1024)
def is_perfect(n: int, size: int, multiplier: float = 1.0) -> bool:
    """Whether every ``size``-subset of [n] has an injective h_{p,q} with range size**2.

    Decided exhaustively while that is cheap.  Past the budget the answer is
    True: the family is known to be perfect for sufficiently large n, and
    :func:`is_perfect` is how the solvers decide what "sufficiently large" means.
    """
    if n < 2 or size < 1 or size > n:
        return False
    range_size = size * size
    table = _value_table(n, range_size, multiplier)
    if not table:
        return False
    if comb(n, size) * len(table) > EXHAUSTIVE_BUDGET:
        return True
    for subset in combinations(range(n), size):
        if not any(len({row[m] for m in subset}) == size for row in table):
            return False
    return True


def kernels(n: int, range_size: int, multiplier: float = 1.0) -> list[tuple[int, ...]]:
    """Distinct fibre partitions of the hash family on [n], maximal under refinement.

    Each partition is given as a canonical block labelling of 1..n.  The set
    of colourings g o h_{p,q} (g arbitrary) is exactly the set of functions
    constant on the blocks of one of these partitions.
    """
    seen: dict[tuple[int, ...], None] = {}
    for row in _value_table(n, range_size, multiplier):
        relabel: dict[int, int] = {}
        seen.setdefault(tuple(relabel.setdefault(v, len(relabel)) for v in row), None)
    parts = sorted(seen, key=lambda lab: -max(lab))
    kept: list[tuple[int, ...]] = []
    for lab in parts:
        if not any(_refines(other, lab) for other in kept):
            kept.append(lab)
    return kept


def _refines(fine: tuple[int, ...], coarse: tuple[int, ...]) -> bool:
    """Whether every block of ``fine`` lies inside a block of ``coarse``."""
    image: dict[int, int] = {}
    for a, b in zip(fine, coarse):
        if image.setdefault(a, b) != b:
            return False
    return True
