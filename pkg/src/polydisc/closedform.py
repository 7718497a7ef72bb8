"""Closed-form discriminator formulas and bounds, all oracle-checkable."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from . import ntheory
from .discriminator import DiscriminatorResult, compute
from .poly import Polynomial


def x_dx_minus_1(d: int) -> Polynomial:
    """The quadratic family x(dx - 1) as coefficients [0, -1, d]."""
    return Polynomial.from_coeffs([0, -1, d])


def sun_power_formula(d: int, n: int) -> int:
    """D for x(dx - 1): d^ceil(log_d n) when d in {2, 3}, 2^ceil(log2 n) when d = 2^r.

    Refuses any other d; the formula is only proven for these families.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if d in (2, 3):
        return d ** ntheory.ceil_log(d, n)
    if d >= 2 and d & (d - 1) == 0:
        return 2 ** ntheory.ceil_log(2, n)
    raise ValueError(f"no proven closed form for d={d} (need d in {{2, 3}} or d = 2^r)")


def lemma1_bound(p: int, r: int, n: int) -> int:
    """Upper bound p^ceil(log_p n) on D for x(p^r x - 1); independent of r."""
    if not ntheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1 or n < 1:
        raise ValueError("r and n must be >= 1")
    return p ** ntheory.ceil_log(p, n)


def bsw_discriminator(j: int, n: int) -> int:
    """D for x^j by the Bremser-Schumer-Washington characterization.

    Odd j: least squarefree k >= n with gcd(phi(k), j) = 1.
    Even j: least k >= 2n of the form q or 2q (q prime) with gcd(phi(k), j) = 2.
    The even branch admits k = 4 = 2*2 literally.
    """
    if j < 1 or n < 1:
        raise ValueError("j and n must be >= 1")
    from math import gcd

    if j % 2 == 1:
        k = n
        while True:
            if ntheory.is_squarefree(k) and gcd(ntheory.euler_phi(k), j) == 1:
                return k
            k += 1
    k = 2 * n
    while True:
        if ntheory.is_prime(k) or (k % 2 == 0 and ntheory.is_prime(k // 2)):
            if gcd(ntheory.euler_phi(k), j) == 2:
                return k
        k += 1


@dataclass(frozen=True)
class PrimeFamily:
    """A polynomial whose discriminator is the least prime past a threshold.

    The threshold is the exact rational (a*n + b) / c; the progression
    constraint is p = residue (mod modulus).
    """

    tag: str
    polynomial: Polynomial
    a: int
    b: int
    c: int
    residue: int
    modulus: int

    def threshold_floor(self, n: int) -> int:
        # p > (a*n + b)/c  <=>  p > floor((a*n + b)/c)  for integer p
        return (self.a * n + self.b) // self.c


TWO_X_XMINUS1 = PrimeFamily(
    "2x(x-1)", Polynomial.from_coeffs([0, -2, 2]), a=2, b=-2, c=1, residue=0, modulus=1
)
FOUR_X_4XMINUS1 = PrimeFamily(
    "4x(4x-1)", Polynomial.from_coeffs([0, -4, 16]), a=8, b=-4, c=3, residue=1, modulus=4
)
EIGHTEEN_X_3XMINUS1 = PrimeFamily(
    "18x(3x-1)", Polynomial.from_coeffs([0, -18, 54]), a=3, b=0, c=1, residue=1, modulus=3
)

FAMILIES = {
    "2xx1": TWO_X_XMINUS1,
    "4x4x1": FOUR_X_4XMINUS1,
    "18x3x1": EIGHTEEN_X_3XMINUS1,
}


def sun_prime_discriminator(family: PrimeFamily, n: int) -> int:
    """Least prime past the family threshold in the family's residue class."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return ntheory.next_prime_satisfying(
        family.threshold_floor(n), family.residue, family.modulus
    )


@dataclass(frozen=True)
class SandwichReport:
    """Outcome of checking D_f(n) <= D_{pf}(n) <= p * D_f(n) via the oracle."""

    f: Polynomial
    p: int
    n: int
    d_f: Optional[int]
    d_pf: Optional[int]
    holds: bool


def check_theorem4(f: Polynomial, p: int, n: int) -> SandwichReport:
    """Oracle-computed sandwich check for f versus p*f.

    Both sides come from the brute-force oracle, never a closed form, so the
    check cannot be circular. Nonexistent D_f implies nonexistent D_{pf}
    (the same value collisions survive scaling) and counts as holding.
    """
    if not ntheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    r_f = compute(f, n)
    if f.is_zero():
        return SandwichReport(f, p, n, r_f.value, r_f.value, True)
    r_pf = compute(f.scale(p), n)
    if r_f.value is None:
        holds = r_pf.value is None
    else:
        holds = r_pf.value is not None and r_f.value <= r_pf.value <= p * r_f.value
    return SandwichReport(f, p, n, r_f.value, r_pf.value, holds)


def sample_sandwich_trials(
    count: int,
    seed: int,
    max_degree: int = 3,
    coeff_bound: int = 9,
    primes: tuple[int, ...] = (2, 3, 5),
    n_max: int = 40,
) -> Iterator[SandwichReport]:
    """Seeded random (f, p, n) sandwich checks for property testing."""
    rng = random.Random(seed)
    for _ in range(count):
        degree = rng.randint(0, max_degree)
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(degree + 1)]
        f = Polynomial.from_coeffs(coeffs)
        p = rng.choice(primes)
        n = rng.randint(1, n_max)
        yield check_theorem4(f, p, n)
