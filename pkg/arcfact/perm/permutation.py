"""
Permutations of {0..n-1}.

Products follow the right-action convention: x^(pq) = (x^p)^q, so
(p * q)(x) = q(p(x)).
"""

from functools import total_ordering
from math import lcm
from typing import Iterable, List, Sequence, Tuple

from arcfact.core.errors import InvalidArgumentError, InvalidPermutationError


@total_ordering
class Permutation:
    """Immutable permutation stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n < 1:
            raise InvalidPermutationError("degree must be positive")
        if sorted(images) != list(range(n)):
            raise InvalidPermutationError(f"images {list(images)} are not a bijection of 0..{n - 1}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: Tuple[int, ...]) -> "Permutation":
        obj = cls.__new__(cls)
        obj.images = images
        obj._hash = hash(images)
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise InvalidArgumentError("degree must be positive")
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-indexed cycles; points not mentioned are fixed."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise InvalidPermutationError(f"point {point} outside 0..{degree - 1}")
                if point in seen:
                    raise InvalidPermutationError(f"point {point} repeated in cycles")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise InvalidArgumentError(f"degree mismatch: {self.degree} vs {other.degree}")
        q = other.images
        return Permutation._trusted(tuple(q[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate_by(self, y: "Permutation") -> "Permutation":
        """x^y = y^-1 x y."""
        return y.inverse() * self * y

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> List[int]:
        """Sorted lengths of the nontrivial cycles."""
        return sorted(len(c) for c in self.cycles())

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def support(self) -> List[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def to_cycle_string(self, one_indexed: bool = True) -> str:
        shift = 1 if one_indexed else 0
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p + shift) for p in c) + ")" for c in cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string()}, degree={self.degree})"
