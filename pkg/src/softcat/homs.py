"""Hom-set enumeration and exhaustive families of soft sets."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .core import SoftMorphism, SoftSet, Universe, is_absolute, is_null
from .errors import UniverseMismatch


def _allowed_values(source: SoftSet, target: SoftSet) -> list[list[str]]:
    # for each source parameter, the target parameters whose image contains its image
    tmasks = target.masks
    return [
        [b for b, tm in zip(target.params, tmasks) if sm & ~tm == 0]
        for sm in source.masks
    ]


@lru_cache(maxsize=8192)
def _hom(source: SoftSet, target: SoftSet) -> tuple[SoftMorphism, ...]:
    choices = _allowed_values(source, target)
    return tuple(SoftMorphism(source, values, target) for values in itertools.product(*choices))


def enumerate_hom(source: SoftSet, target: SoftSet) -> tuple[SoftMorphism, ...]:
    """All soft morphisms ``source -> target``.

    Ordered lexicographically by value tuple, comparing target parameters
    by their declared position. An empty source yields the single empty map.
    """
    if source.universe != target.universe:
        raise UniverseMismatch(
            f"soft sets {source.name!r} and {target.name!r} live over different universes"
        )
    return _hom(source, target)


def hom_count(source: SoftSet, target: SoftSet) -> int:
    if source.universe != target.universe:
        raise UniverseMismatch(
            f"soft sets {source.name!r} and {target.name!r} live over different universes"
        )
    if not source.params:
        return 1
    if is_null(source):
        return len(target.params) ** len(source.params)
    return math.prod(len(c) for c in _allowed_values(source, target))


@dataclass(frozen=True)
class ObjectFamily:
    universe: Universe
    max_params: int
    members: tuple[SoftSet, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def expected_family_size(universe_size: int, max_params: int) -> int:
    return sum((2**universe_size) ** k for k in range(max_params + 1))


def generate_object_family(universe: Universe, max_params: int) -> ObjectFamily:
    """Every soft set on the parameter sets ``p1..pk`` for ``k <= max_params``.

    Members are named ``S0, S1, ...`` in generation order: by ``k``, then
    lexicographically over the tuple of image bitmasks.
    """
    if max_params < 0:
        raise ValueError("max_params must be non-negative")
    masks = range(1 << len(universe))
    subsets = [universe.from_mask(m) for m in masks]
    members = []
    for k in range(max_params + 1):
        params = tuple(f"p{i}" for i in range(1, k + 1))
        for combo in itertools.product(range(len(subsets)), repeat=k):
            name = f"S{len(members)}"
            members.append(SoftSet(name, universe, params, tuple(subsets[i] for i in combo)))
    for k in range(1, max_params + 1):
        of_size = [s for s in members if len(s.params) == k]
        assert any(is_null(s) for s in of_size), k
        assert any(is_absolute(s) for s in of_size), k
    return ObjectFamily(universe, max_params, tuple(members))
