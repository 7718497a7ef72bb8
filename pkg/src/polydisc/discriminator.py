"""Brute-force discriminator oracle.

D_f(n) is the least positive m under which f(1), ..., f(n) are pairwise
distinct mod m, or nonexistent when the values themselves collide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .poly import Polynomial

# occupancy bytearray up to this modulus, hash set beyond
_BITMAP_LIMIT = 1 << 22


class BoundViolationError(RuntimeError):
    """A caller-supplied upper bound was exhausted although a value exists."""


@dataclass(frozen=True)
class SearchBounds:
    """Candidate-modulus window: inclusive lower, exclusive upper (None = unbounded)."""

    lower: int = 1
    upper: Optional[int] = None

    def __post_init__(self):
        if self.lower < 1:
            raise ValueError("lower bound must be >= 1")
        if self.upper is not None and self.upper <= self.lower:
            raise ValueError("inconsistent bounds: upper must exceed lower")


@dataclass(frozen=True)
class DiscriminatorResult:
    """Minimal discriminating modulus (None = nonexistent) plus search stats."""

    value: Optional[int]
    n: int
    candidates_tested: int

    @property
    def exists(self) -> bool:
        return self.value is not None


def is_discriminating(f: Polynomial, n: int, m: int) -> bool:
    """True iff f(1..n) are pairwise distinct mod m; exits on first collision."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if m <= _BITMAP_LIMIT:
        seen = bytearray(m)
        for i in range(1, n + 1):
            r = f.evaluate_mod(i, m)
            if seen[r]:
                return False
            seen[r] = 1
    else:
        seen_set = set()
        for i in range(1, n + 1):
            r = f.evaluate_mod(i, m)
            if r in seen_set:
                return False
            seen_set.add(r)
    return True


def trivial_upper_bound(f: Polynomial, n: int) -> Optional[int]:
    """max - min + 1 of f(1..n) when those values are distinct, else None.

    Any m at or above the spread fits the n distinct values into distinct
    residues, so the minimal discriminating m exists at or below this bound.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    values = [f.evaluate(i) for i in range(1, n + 1)]
    if len(set(values)) < n:
        return None
    return max(values) - min(values) + 1


def compute(
    f: Polynomial,
    n: int,
    bounds: Union[SearchBounds, str, None] = "auto",
) -> DiscriminatorResult:
    """Ascending scan for the minimal discriminating modulus.

    With "auto" bounds the scan starts at n (pigeonhole lower bound) and is
    capped by the trivial spread bound, so it always terminates. Explicit
    bounds are validated: exhausting a caller-supplied upper while the
    trivial bound proves a value exists raises BoundViolationError.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    tub = trivial_upper_bound(f, n)
    if tub is None:
        return DiscriminatorResult(None, n, 0)
    if bounds is None or bounds == "auto":
        lower, upper = max(n, 1), tub + 1
    else:
        lower, upper = bounds.lower, bounds.upper
        if upper is None:
            upper = max(tub + 1, lower + 1)
    tested = 0
    for m in range(lower, upper):
        tested += 1
        if is_discriminating(f, n, m):
            return DiscriminatorResult(m, n, tested)
    raise BoundViolationError(
        f"no discriminating modulus in [{lower}, {upper}) although one exists below {tub + 1}"
    )


def scan(
    f: Polynomial,
    n_max: int,
    upper_bound: Optional[Callable[[int], int]] = None,
) -> list[DiscriminatorResult]:
    """compute(f, n) for n = 1..n_max with monotone warm starts.

    D_f(n) >= D_f(n-1), so each search resumes at the previous value.
    `upper_bound`, when given, maps n to an inclusive cap on D_f(n) that the
    caller guarantees (e.g. the p^ceil(log_p n) bound for x(p^r x - 1)).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    results: list[DiscriminatorResult] = []
    seen_values: set[int] = set()
    vmin = vmax = None
    collided = False
    prev = 1
    for n in range(1, n_max + 1):
        v = f.evaluate(n)
        if v in seen_values:
            collided = True
        seen_values.add(v)
        vmin = v if vmin is None else min(vmin, v)
        vmax = v if vmax is None else max(vmax, v)
        if collided:
            results.append(DiscriminatorResult(None, n, 0))
            continue
        hi = vmax - vmin + 2
        if upper_bound is not None:
            hi = min(hi, upper_bound(n) + 1)
        lower = max(prev, n)
        tested = 0
        value = None
        for m in range(lower, hi):
            tested += 1
            if is_discriminating(f, n, m):
                value = m
                break
        if value is None:
            raise BoundViolationError(
                f"upper bound exhausted at n={n} (scanned [{lower}, {hi}))"
            )
        results.append(DiscriminatorResult(value, n, tested))
        prev = value
    return results
