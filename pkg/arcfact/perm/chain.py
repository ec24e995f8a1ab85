"""
Stabilizer chains (base and strong generating sets).

Construction runs a randomized Schreier-Sims pass seeded from the active
settings, then the deterministic Schreier generator check, which adds
whatever the random pass missed. The chain is frozen after that.
"""

import itertools
import random
from typing import Dict, Iterator, List, Sequence, Tuple

from .permutation import Permutation


class _Level:
    """One level of the chain: base point, strong generators, orbit transversal."""

    __slots__ = ("base", "gens", "transversal", "degree")

    def __init__(self, base: int, gens: List[Permutation], degree: int):
        self.base = base
        self.gens = list(gens)
        self.degree = degree
        # point -> (u, u^-1) with base^u = point
        self.transversal: Dict[int, Tuple[Permutation, Permutation]] = {}
        self.rebuild()

    def rebuild(self) -> None:
        ident = Permutation.identity(self.degree)
        trans = {self.base: (ident, ident)}
        queue = [self.base]
        for point in queue:
            u = trans[point][0]
            for s in self.gens:
                image = s.images[point]
                if image not in trans:
                    v = u * s
                    trans[image] = (v, v.inverse())
                    queue.append(image)
        self.transversal = trans

    def add_generator(self, h: Permutation) -> None:
        self.gens.append(h)
        self.rebuild()

    @property
    def orbit_size(self) -> int:
        return len(self.transversal)


class StabilizerChain:
    """Base, strong generators and transversals for a permutation group."""

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        base_prefix: Sequence[int] = (),
        seed: int = 0,
        random_rounds: int = 24,
    ):
        self.degree = degree
        self.levels: List[_Level] = []
        gens = [g for g in generators if not g.is_identity()]

        for b in dict.fromkeys(base_prefix):
            self._append_level(b, [])
        for g in gens:
            if all(g.images[lvl.base] == lvl.base for lvl in self.levels):
                self._append_level(g.support()[0], [])
        for idx, lvl in enumerate(self.levels):
            fixing = [g for g in gens if all(g.images[self.levels[j].base] == self.levels[j].base for j in range(idx))]
            lvl.gens = fixing
            lvl.rebuild()

        if gens and random_rounds > 0:
            self._random_pass(gens, random.Random(seed), random_rounds)
        self._verify()

    @classmethod
    def from_levels(cls, degree: int, levels: List[_Level]) -> "StabilizerChain":
        """Chain for the stabilizer of the first base points, sharing verified deeper levels."""
        chain = cls.__new__(cls)
        chain.degree = degree
        chain.levels = levels
        return chain

    def _append_level(self, base: int, gens: List[Permutation]) -> _Level:
        level = _Level(base, gens, self.degree)
        self.levels.append(level)
        return level

    def strip(self, x: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """
        Sift x down the chain from level `start`.

        Returns:
            (residue, level reached); level == len(levels) means x sifted through
        """
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            entry = lvl.transversal.get(x.images[lvl.base])
            if entry is None:
                return x, i
            x = x * entry[1]
        return x, len(self.levels)

    def _insert(self, h: Permutation, first: int, last: int) -> None:
        if last == len(self.levels):
            self._append_level(h.support()[0], [])
        for l in range(first, last + 1):
            self.levels[l].add_generator(h)

    def _random_pass(self, gens: List[Permutation], rng: random.Random, rounds: int) -> None:
        # product replacement
        state = list(gens)
        while len(state) < 10:
            state.append(gens[len(state) % len(gens)])
        accumulator = Permutation.identity(self.degree)
        for _ in range(30):
            accumulator, state = _shake(accumulator, state, rng)

        quiet = 0
        while quiet < rounds:
            accumulator, state = _shake(accumulator, state, rng)
            h, j = self.strip(accumulator)
            if j == len(self.levels) and h.is_identity():
                quiet += 1
                continue
            quiet = 0
            self._insert(h, 0, j)

    def _verify(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            changed = False
            for point, (u, _) in list(lvl.transversal.items()):
                for s in lvl.gens:
                    image = s.images[point]
                    schreier = u * s * lvl.transversal[image][1]
                    if schreier.is_identity():
                        continue
                    h, j = self.strip(schreier, i + 1)
                    if j < len(self.levels) or not h.is_identity():
                        self._insert(h, i + 1, j)
                        i = j
                        changed = True
                        break
                if changed:
                    break
            if not changed:
                i -= 1

    @property
    def base(self) -> List[int]:
        return [lvl.base for lvl in self.levels]

    @property
    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= lvl.orbit_size
        return n

    def strong_generators(self) -> List[Permutation]:
        return list(self.levels[0].gens) if self.levels else []

    def contains(self, x: Permutation) -> bool:
        h, j = self.strip(x)
        return j == len(self.levels) and h.is_identity()

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, as u_{k-1} * ... * u_0."""
        if not self.levels:
            yield Permutation.identity(self.degree)
            return
        columns = [
            [lvl.transversal[p][0] for p in sorted(lvl.transversal)]
            for lvl in reversed(self.levels)
        ]
        for combo in itertools.product(*columns):
            x = combo[0]
            for u in combo[1:]:
                x = x * u
            yield x

    def random_element(self, rng: random.Random) -> Permutation:
        x = Permutation.identity(self.degree)
        for lvl in reversed(self.levels):
            x = x * lvl.transversal[rng.choice(sorted(lvl.transversal))][0]
        return x


def _shake(
    accumulator: Permutation, state: List[Permutation], rng: random.Random
) -> Tuple[Permutation, List[Permutation]]:
    i, j = rng.sample(range(len(state)), 2)
    state = list(state)
    if rng.random() < 0.5:
        state[i] = state[i] * state[j]
    else:
        state[i] = state[j] * state[i]
    return accumulator * state[i], state
