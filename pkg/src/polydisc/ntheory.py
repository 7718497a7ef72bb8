"""Elementary number theory: primality, factorization, totient, progressions."""

from __future__ import annotations

from math import gcd, isqrt
from typing import Optional

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin witness sets (threshold, bases); the last set
# is proven correct for n < 3_317_044_064_679_887_385_961_981, well beyond
# the 64-bit range.
_MR_LADDER = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)

_TRIAL_LIMIT = 10 ** 6


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with proven witness sets)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 41 * 41:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_LADDER[-1][1]
    for threshold, witness_set in _MR_LADDER:
        if n < threshold:
            bases = witness_set
            break
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n > 1 (Floyd cycle, fixed seeds)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as ascending (prime, exponent) pairs; 1 -> []."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    factors: dict[int, int] = {}

    def record(p: int) -> None:
        factors[p] = factors.get(p, 0) + 1

    for p in (2, 3, 5):
        while n % p == 0:
            record(p)
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            record(d)
            n //= d
        d += wheel[w]
        w = (w + 1) % len(wheel)
    # anything left is either prime or needs rho
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            record(m)
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return sorted(factors.items())


def euler_phi(n: int) -> int:
    """Euler totient via factorization."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise ValueError("is_squarefree requires n >= 1")
    return all(e == 1 for _, e in factorize(n))


def mod_inverse(a: int, m: int) -> Optional[int]:
    """Inverse of a mod m in [1, m), or None when gcd(a, m) > 1."""
    if m < 2:
        raise ValueError("mod_inverse requires m >= 2")
    try:
        return pow(a, -1, m)
    except ValueError:
        return None


def ceil_log(base: int, n: int) -> int:
    """Smallest e >= 0 with base**e >= n, exact integer arithmetic."""
    if base < 2:
        raise ValueError("ceil_log requires base >= 2")
    if n < 1:
        raise ValueError("ceil_log requires n >= 1")
    e = 0
    power = 1
    while power < n:
        power *= base
        e += 1
    return e


def next_prime_satisfying(lower: int, residue: int, modulus: int) -> int:
    """Smallest prime p > lower with p = residue (mod modulus).

    Terminates by Dirichlet when gcd(residue, modulus) = 1 or modulus = 1;
    an infeasible residue class contains at most one prime (the gcd itself),
    which is tried before failing.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    residue %= modulus
    if modulus > 1:
        g = gcd(residue, modulus)
        if g > 1:
            if g > lower and g % modulus == residue and is_prime(g):
                return g
            raise ValueError(
                f"residue class {residue} mod {modulus} contains no prime > {lower}"
            )
    candidate = lower + 1
    if modulus > 1:
        candidate += (residue - candidate) % modulus
    while True:
        if is_prime(candidate):
            return candidate
        candidate += modulus
