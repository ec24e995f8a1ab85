"""
Exact integer primitives: p-parts, prime sets, Legendre's formula and primitive prime divisors.
All comparisons are integer comparisons; nothing here touches floating point.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from sympy import isprime
from sympy.ntheory import n_order, pollard_rho, factorint

from arcfact.core.config import active_settings
from arcfact.core.errors import InvalidArgumentError


@dataclass(frozen=True)
class PpdResult:
    a: int
    m: int
    primes: FrozenSet[int]
    exceptional: bool

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "m": self.m,
            "primes": sorted(self.primes),
            "exceptional": self.exceptional,
        }


@dataclass(frozen=True)
class FactorialPart:
    value: int
    exponent: int
    bound_holds: bool


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise InvalidArgumentError(f"{p!r} is not a prime")


def _require_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"{name} must be a positive integer, got {n!r}")


def _split_cofactor(n: int, out: Dict[int, int]) -> None:
    if n == 1:
        return
    if isprime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = pollard_rho(n, seed=1234, retries=10)
    if d is None or d in (1, n):
        for r, e in factorint(n).items():
            out[r] = out.get(r, 0) + e
        return
    _split_cofactor(d, out)
    _split_cofactor(n // d, out)


def factorize(n: int, trial_bound: Optional[int] = None) -> Dict[int, int]:
    """
    Factor n by trial division, handing large cofactors to Pollard rho.

    Args:
        n: Positive integer
        trial_bound: Largest trial divisor (defaults to the configured bound)

    Returns:
        Mapping prime -> exponent (empty for n = 1)
    """
    _require_positive(n)
    bound = trial_bound if trial_bound is not None else active_settings().trial_division
    factors: Dict[int, int] = {}

    d = 2
    while d <= bound and d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2

    if n > 1:
        if d * d > n:
            factors[n] = factors.get(n, 0) + 1
        else:
            _split_cofactor(n, factors)
    return dict(sorted(factors.items()))


def p_part(n: int, p: int) -> int:
    """Largest power of the prime p dividing n."""
    _require_positive(n)
    _require_prime(p)
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def prime_set(n: int) -> FrozenSet[int]:
    """pi(n): the set of prime divisors of n; empty for n = 1."""
    return frozenset(factorize(n))


def prime_power(q: int) -> Tuple[int, int]:
    """Decompose q = p^f, raising if q is not a prime power."""
    _require_positive(q, "q")
    factors = factorize(q)
    if len(factors) != 1:
        raise InvalidArgumentError(f"{q} is not a prime power")
    (p, f), = factors.items()
    return p, f


def legendre_exponent(n: int, p: int) -> int:
    """Exponent of p in n!, as the sum of floor(n / p^i)."""
    e, pk = 0, p
    while pk <= n:
        e += n // pk
        pk *= p
    return e


def factorial_p_part(n: int, p: int) -> FactorialPart:
    """
    (n!)_p together with the exact check ((n!)_p)^(p-1) < p^n.

    Args:
        n: Positive integer
        p: Prime

    Returns:
        FactorialPart(value, exponent, bound_holds)
    """
    _require_positive(n)
    _require_prime(p)
    exponent = legendre_exponent(n, p)
    value = p**exponent
    return FactorialPart(value=value, exponent=exponent, bound_holds=value ** (p - 1) < p**n)


def multiplicative_order(a: int, r: int) -> int:
    """Order of a modulo r (a and r coprime)."""
    return int(n_order(a, r))


def zsigmondy_exception(a: int, m: int) -> bool:
    """True for the pairs where a^m - 1 has no primitive prime divisor."""
    if (a, m) == (2, 6):
        return True
    return m == 2 and ((a + 1) & a) == 0


def is_primitive_prime_divisor(r: int, a: int, m: int) -> bool:
    """Definition check: r | a^m - 1 and r divides no a^i - 1 with 0 < i < m."""
    if not isprime(r) or (a**m - 1) % r:
        return False
    return all((a**i - 1) % r for i in range(1, m))


def ppd(a: int, m: int) -> PpdResult:
    """
    Primitive prime divisors of a^m - 1.

    (2, 6) returns {7} by convention, flagged exceptional.
    """
    if not isinstance(a, int) or not isinstance(m, int) or a < 2 or m < 2:
        raise InvalidArgumentError(f"ppd needs a >= 2 and m >= 2, got ({a}, {m})")
    if (a, m) == (2, 6):
        return PpdResult(a=a, m=m, primes=frozenset({7}), exceptional=True)

    primes = frozenset(
        r for r in factorize(a**m - 1) if multiplicative_order(a, r) == m
    )
    return PpdResult(a=a, m=m, primes=primes, exceptional=zsigmondy_exception(a, m))


if __name__ == "__main__":
    for base in range(2, 6):
        row = [sorted(ppd(base, m).primes) for m in range(2, 9)]
        print(f"[ppd] a={base}: {row}")
