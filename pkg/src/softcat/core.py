"""Soft sets and soft morphisms over a fixed finite universe.

Subsets of the universe are stored as bitmasks against the universe's
element order: bit ``i`` stands for ``universe.elements[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CompositionMismatch,
    DuplicateElement,
    DuplicateParameter,
    ElementNotInUniverse,
    MapNotTotal,
    MapRangeInvalid,
    SoftConditionViolated,
    UniverseMismatch,
)


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        index: dict[str, int] = {}
        for i, e in enumerate(elements):
            if e in index:
                raise DuplicateElement(f"element {e!r} listed twice in universe")
            index[e] = i
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self._index

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def subset(self, members: Iterable[str]) -> Subset:
        mask = 0
        for m in members:
            try:
                mask |= 1 << self._index[m]
            except KeyError:
                raise ElementNotInUniverse(f"element {m!r} is not in the universe") from None
        return Subset(self, mask)

    def from_mask(self, mask: int) -> Subset:
        if mask < 0 or mask > self.full_mask:
            raise ElementNotInUniverse(f"mask {mask:#b} has bits outside the universe")
        return Subset(self, mask)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)


@dataclass(frozen=True)
class Subset:
    """A subset of a universe. Equality is extensional."""

    universe: Universe
    mask: int

    @property
    def members(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.universe.elements) if self.mask >> i & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, element: object) -> bool:
        i = self.universe._index.get(element)  # type: ignore[arg-type]
        return i is not None and bool(self.mask >> i & 1)

    def issubset(self, other: Subset) -> bool:
        return self.mask & ~other.mask == 0

    def __le__(self, other: Subset) -> bool:
        return self.issubset(other)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.members) + "}"


@dataclass(frozen=True)
class SoftSet:
    """A named parameter set together with an image subset per parameter.

    ``images[i]`` is the image of ``params[i]``. Two soft sets are equal
    when name, universe, params and images all agree.
    """

    name: str
    universe: Universe
    params: tuple[str, ...]
    images: tuple[Subset, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.params) != len(self.images):
            raise ValueError("params and images must have the same length")
        index: dict[str, int] = {}
        for i, p in enumerate(self.params):
            if p in index:
                raise DuplicateParameter(f"parameter {p!r} assigned twice in soft set {self.name!r}")
            index[p] = i
        for p, img in zip(self.params, self.images):
            if img.universe != self.universe:
                raise UniverseMismatch(f"image of {p!r} lives in a different universe")
        object.__setattr__(self, "index", index)

    def __getitem__(self, param: str) -> Subset:
        return self.images[self.index[param]]

    def __len__(self) -> int:
        return len(self.params)

    @property
    def mapping(self) -> dict[str, Subset]:
        return dict(zip(self.params, self.images))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(img.mask for img in self.images)


def make_soft_set(
    universe: Universe,
    name: str,
    assignments: Sequence[tuple[str, Subset | Iterable[str]]],
) -> SoftSet:
    """Build a soft set from ``(param, image)`` pairs, keeping their order.

    Images may be given as :class:`Subset` values or as iterables of
    element names.
    """
    params = []
    images = []
    seen = set()
    for param, image in assignments:
        if param in seen:
            raise DuplicateParameter(f"parameter {param!r} assigned twice in soft set {name!r}")
        seen.add(param)
        if isinstance(image, Subset):
            if image.universe != universe:
                raise UniverseMismatch(f"image of {param!r} lives in a different universe")
        else:
            image = universe.subset(image)
        params.append(param)
        images.append(image)
    return SoftSet(name, universe, tuple(params), tuple(images))


def is_null(s: SoftSet) -> bool:
    return all(img.mask == 0 for img in s.images)


def is_absolute(s: SoftSet) -> bool:
    full = s.universe.full_mask
    return all(img.mask == full for img in s.images)


@dataclass(frozen=True)
class SoftMorphism:
    """A triple (source, parameter map, target).

    ``values[i]`` is where ``source.params[i]`` is sent. Build instances
    through :func:`make_morphism`, which enforces the soft condition.
    """

    source: SoftSet
    values: tuple[str, ...]
    target: SoftSet

    @property
    def map(self) -> dict[str, str]:
        return dict(zip(self.source.params, self.values))

    def __call__(self, param: str) -> str:
        return self.values[self.source.index[param]]

    def __repr__(self) -> str:
        pairs = ", ".join(f"{a}->{b}" for a, b in zip(self.source.params, self.values))
        return f"SoftMorphism({self.source.name} -> {self.target.name}: {pairs})"


def _first_violation(source: SoftSet, values: Sequence[str], target: SoftSet) -> str | None:
    idx = target.index
    for a, img, b in zip(source.params, source.images, values):
        if img.mask & ~target.images[idx[b]].mask:
            return a
    return None


def make_morphism(source: SoftSet, mapping: Mapping[str, str], target: SoftSet) -> SoftMorphism:
    if source.universe != target.universe:
        raise UniverseMismatch(
            f"soft sets {source.name!r} and {target.name!r} live over different universes"
        )
    extra = [a for a in mapping if a not in source.index]
    if extra:
        raise MapNotTotal(f"map is defined on {extra[0]!r}, which is not a parameter of {source.name!r}")
    values = []
    for a in source.params:
        if a not in mapping:
            raise MapNotTotal(f"map is undefined on parameter {a!r} of {source.name!r}")
        b = mapping[a]
        if b not in target.index:
            raise MapRangeInvalid(f"{a!r} is sent to {b!r}, which is not a parameter of {target.name!r}")
        values.append(b)
    bad = _first_violation(source, values, target)
    if bad is not None:
        raise SoftConditionViolated(
            bad,
            f"soft condition violated at parameter {bad!r}: "
            f"{source[bad]!r} is not contained in {target[mapping[bad]]!r}",
        )
    return SoftMorphism(source, tuple(values), target)


def check_soft_condition(m: SoftMorphism) -> None:
    """Raise :class:`SoftConditionViolated` unless ``m`` is a valid soft morphism."""
    make_morphism(m.source, m.map, m.target)


def identity(s: SoftSet) -> SoftMorphism:
    return SoftMorphism(s, s.params, s)


def compose(g: SoftMorphism, f: SoftMorphism) -> SoftMorphism:
    """Return ``g ∘ f`` (first ``f``, then ``g``)."""
    if f.target != g.source:
        raise CompositionMismatch(
            f"cannot compose: target {f.target.name!r} of the first morphism "
            f"differs from source {g.source.name!r} of the second"
        )
    gidx = g.source.index
    values = tuple(g.values[gidx[b]] for b in f.values)
    bad = _first_violation(f.source, values, g.target)
    if bad is not None:  # pragma: no cover - impossible for valid inputs
        raise SoftConditionViolated(bad)
    return SoftMorphism(f.source, values, g.target)


def morphisms_equal(f: SoftMorphism, g: SoftMorphism) -> bool:
    return f == g
