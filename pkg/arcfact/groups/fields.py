"""
Small finite fields F_q (q = p^f <= 81) as numpy lookup tables.

Elements are integers 0..q-1 encoding coefficient vectors in base p:
a = c_0 + c_1 p + ... + c_{f-1} p^{f-1} stands for c_0 + c_1 x + ... modulo
the field's irreducible polynomial.
"""

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from arcfact.core.errors import InternalInvariantError, InvalidArgumentError
from arcfact.numtheory import prime_power

MAX_BUILTIN_Q = 81
MAX_TABLE_Q = 1024

# monic irreducible polynomials, coefficients low -> high
IRREDUCIBLE = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    27: (1, 2, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    49: (3, 6, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    81: (2, 1, 0, 0, 1),
}


def _poly_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial m over F_p."""
    a = _poly_trim([c % p for c in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        lead = a[-1]
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _poly_trim(a)
    return a


def find_factor(modulus: Sequence[int], p: int) -> Optional[Tuple[int, ...]]:
    """A monic factor of degree 1..deg/2, or None when the polynomial is irreducible."""
    f = len(modulus) - 1
    for d in range(1, f // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            candidate = list(low) + [1]
            if not _poly_mod(modulus, candidate, p):
                return tuple(candidate)
    return None


@dataclass(frozen=True)
class FieldElement:
    field: "FiniteField"
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.q != self.field.q:
                raise InvalidArgumentError("elements of different fields")
            return other.value
        return self.field.embed_int(int(other))

    def __add__(self, other) -> "FieldElement":
        return FieldElement(self.field, int(self.field.add[self.value, self._coerce(other)]))

    def __sub__(self, other) -> "FieldElement":
        return self + (-FieldElement(self.field, self._coerce(other)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, int(self.field.neg[self.value]))

    def __mul__(self, other) -> "FieldElement":
        return FieldElement(self.field, int(self.field.mul[self.value, self._coerce(other)]))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.invert(self.value))

    def __truediv__(self, other) -> "FieldElement":
        return self * FieldElement(self.field, self._coerce(other)).inverse()

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.field, self.field.power(self.value, k))

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldElement) and (self.field.q, self.value) == (other.field.q, other.value)

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __repr__(self) -> str:
        return f"F{self.field.q}({self.value})"


class FiniteField:
    """Addition, multiplication and inversion tables for F_q plus a verified primitive element."""

    def __init__(self, q: int, modulus: Optional[Sequence[int]] = None, check_samples: int = 300):
        p, f = prime_power(q)
        if q > MAX_TABLE_Q:
            raise InvalidArgumentError(f"F_{q} is beyond the table limit {MAX_TABLE_Q}")
        self.q, self.p, self.f = q, p, f
        if modulus is None:
            if f == 1:
                modulus = (0, 1)
            elif q in IRREDUCIBLE:
                modulus = IRREDUCIBLE[q]
            else:
                raise InvalidArgumentError(f"no built-in polynomial for q = {q} (limit {MAX_BUILTIN_Q})")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise InvalidArgumentError(f"modulus must be monic of degree {f}")
        factor = find_factor(modulus, p) if f > 1 else None
        if factor is not None:
            raise InvalidArgumentError(f"polynomial {list(modulus)} is reducible over F_{p}: factor {list(factor)}")
        self.modulus = modulus

        digits = np.array([[(a // p**i) % p for i in range(f)] for a in range(q)], dtype=np.int64)
        weights = np.array([p**i for i in range(f)], dtype=np.int64)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights

        # x^k mod modulus for k < 2f - 1, as digit vectors
        xpow = np.zeros((2 * f - 1, f), dtype=np.int64)
        for k in range(2 * f - 1):
            reduced = _poly_mod([0] * k + [1], modulus, p)
            xpow[k, : len(reduced)] = reduced
        conv = np.zeros((q, q, 2 * f - 1), dtype=np.int64)
        for i in range(f):
            for j in range(f):
                conv[:, :, i + j] += np.outer(digits[:, i], digits[:, j])
        self.mul = ((conv @ xpow) % p) @ weights

        self.inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.flatnonzero(self.mul[a] == 1)
            if len(hits) != 1:
                raise InternalInvariantError(f"F_{q}: element {a} has {len(hits)} inverses")
            self.inv[a] = hits[0]

        self._check_axioms(check_samples)
        self.primitive_element = self._find_primitive()

    def _check_axioms(self, samples: int) -> None:
        rng = random.Random(self.q)
        for _ in range(samples):
            a, b, c = (rng.randrange(self.q) for _ in range(3))
            if self.mul[self.mul[a, b], c] != self.mul[a, self.mul[b, c]]:
                raise InternalInvariantError(f"F_{self.q}: multiplication not associative at {(a, b, c)}")
            if self.add[self.add[a, b], c] != self.add[a, self.add[b, c]]:
                raise InternalInvariantError(f"F_{self.q}: addition not associative at {(a, b, c)}")
            if self.mul[a, self.add[b, c]] != self.add[self.mul[a, b], self.mul[a, c]]:
                raise InternalInvariantError(f"F_{self.q}: distributivity fails at {(a, b, c)}")

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise InvalidArgumentError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = int(self.mul[x, a])
            k += 1
        return k

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        raise InternalInvariantError(f"F_{self.q} has no primitive element")

    def embed_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def invert(self, a: int) -> int:
        if a == 0:
            raise InvalidArgumentError("division by zero in F_q")
        return int(self.inv[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.invert(a), -k
        result = 1
        for _ in range(k % (self.q - 1) if a else k):
            result = int(self.mul[result, a])
        return result if (a or k) else 1

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)

    def element(self, value: int) -> FieldElement:
        if not 0 <= value < self.q:
            raise InvalidArgumentError(f"{value} is not an element code of F_{self.q}")
        return FieldElement(self, value)

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def verify_field(q: int, modulus: Optional[Tuple[int, ...]] = None) -> FiniteField:
    """F_q with verified tables and a primitive element (cached)."""
    return FiniteField(q, modulus)
