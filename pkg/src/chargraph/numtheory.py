"""Prime machinery: primality testing, factorization, prime-power recognition.

Factorization is exact for 2 <= n < 2**96: trial division by a sieved table of
small primes, then Miller-Rabin primality plus Brent-cycle Pollard rho on what
remains.  Larger inputs are rejected outright instead of risking unbounded
runtime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameter, OutOfRange

FACTOR_LIMIT = 1 << 96


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(10_000)

# The first 13 primes are a proven witness set below this bound (Sorenson-Webster);
# past it a strong Lucas test is added, giving a Baillie-PSW-style check with no
# known composite passing it anywhere near our 2**96 cap.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981


def _mr_passes(a: int, d: int, s: int, n: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_passes(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge parameters; n odd, not a square."""
    D = 5
    while True:
        j = _jacobi(D % n, n)
        if j == -1:
            break
        if j == 0:
            return False
        D = -(D + 2) if D > 0 else -(D - 2)
    P, Q = 1, (1 - D) // 4
    d = n + 1
    s = (d & -d).bit_length() - 1
    d >>= s
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = P * U + V, D * U + P * V
            if U & 1:
                U += n
            if V & 1:
                V += n
            U = (U >> 1) % n
            V = (V >> 1) % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality for n below the proven Miller-Rabin bound (~3.3e24),
    Miller-Rabin + strong Lucas above it."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 43 * 43:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if not all(_mr_passes(a, d, s, n) for a in _MR_BASES):
        return False
    if n < _MR_PROVEN_BOUND:
        return True
    if math.isqrt(n) ** 2 == n:
        return False
    return _strong_lucas_passes(n)


def _brent_rho(n: int) -> int:
    """Nontrivial factor of an odd composite n, Brent's cycle variant.

    Deterministic: polynomial constants are tried in order 1, 2, 3, ...
    """
    c = 0
    while True:
        c += 1
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            # batched gcd overshot the collision; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[int, ...]:
    """Prime factors of n with multiplicity, ascending.

    Raises OutOfRange unless 2 <= n < 2**96.
    """
    if n < 2 or n >= FACTOR_LIMIT:
        raise OutOfRange(f"factorize requires 2 <= n < 2**96, got {n}")
    out: list[int] = []
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            out.append(p)
            m //= p
    if m > 1:
        if m <= _SMALL_PRIMES[-1] ** 2 or is_prime(m):
            out.append(m)
        else:
            stack = [m]
            while stack:
                v = stack.pop()
                if is_prime(v):
                    out.append(v)
                    continue
                d = _brent_rho(v)
                stack.append(d)
                stack.append(v // d)
    out.sort()
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    """The set of prime divisors of n, ascending; empty for n = 1."""
    if n < 1 or n >= FACTOR_LIMIT:
        raise OutOfRange(f"prime_divisors requires 1 <= n < 2**96, got {n}")
    if n == 1:
        return ()
    return tuple(sorted(set(factorize(n))))


@dataclass(frozen=True, order=True)
class PrimePower:
    """A validated pair (base, exponent) with base prime and exponent >= 1."""

    base: int
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise BadParameter(f"exponent must be positive, got {self.exponent}")
        if not is_prime(self.base):
            raise BadParameter(f"base {self.base} is not prime")

    @property
    def value(self) -> int:
        return self.base**self.exponent

    def __str__(self) -> str:
        return str(self.value) if self.exponent == 1 else f"{self.base}^{self.exponent}"


def as_prime_power(n: int) -> PrimePower | None:
    """Write n as p^f if it is a prime power, else None."""
    if n < 2 or n >= FACTOR_LIMIT:
        raise OutOfRange(f"as_prime_power requires 2 <= n < 2**96, got {n}")
    factors = factorize(n)
    if factors.count(factors[0]) != len(factors):
        return None
    return PrimePower(factors[0], len(factors))
