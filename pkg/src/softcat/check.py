"""Cross-check every characterization against its definitional oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import SoftMorphism, SoftSet, Universe
from .homs import ObjectFamily, enumerate_hom, generate_object_family
from . import morphisms as mc
from . import objects as oc

OBJECT_CHECKS: dict[str, tuple[Callable, Callable]] = {
    "initial": (oc.is_initial, oc.oracle_is_initial),
    "terminal": (oc.is_terminal, oc.oracle_is_terminal),
    "zero": (oc.is_zero, oc.oracle_is_zero),
    "separator": (oc.is_separator, oc.oracle_is_separator),
    "coseparator": (oc.is_coseparator, oc.oracle_is_coseparator),
}

MORPHISM_CHECKS: dict[str, tuple[Callable, Callable]] = {
    "epi": (mc.is_epi, mc.oracle_is_epi),
    "mono": (mc.is_mono, mc.oracle_is_mono),
}


@dataclass
class Tally:
    total: int = 0
    agree: int = 0
    disagreements: list[str] = field(default_factory=list)


@dataclass
class OracleReport:
    family: ObjectFamily
    tallies: dict[str, Tally]

    @property
    def ok(self) -> bool:
        return all(t.agree == t.total for t in self.tallies.values())


def family_morphisms(family: ObjectFamily) -> list[SoftMorphism]:
    return [m for f, g in itertools.product(family, repeat=2) for m in enumerate_hom(f, g)]


def _describe(m: SoftMorphism) -> str:
    pairs = ",".join(f"{a}->{b}" for a, b in zip(m.source.params, m.values))
    return f"{m.source.name}->{m.target.name}[{pairs}]"


def oracle_check(
    universe: Universe,
    max_params: int,
    extra_sets: Iterable[SoftSet] = (),
    extra_morphisms: Iterable[SoftMorphism] = (),
) -> OracleReport:
    """Compare decisions and oracles on the family plus any extra objects/morphisms."""
    family = generate_object_family(universe, max_params)
    tallies = {key: Tally() for key in [*OBJECT_CHECKS, *MORPHISM_CHECKS]}
    objects = [*family.members, *extra_sets]
    for s in objects:
        for key, (decide, oracle) in OBJECT_CHECKS.items():
            t = tallies[key]
            t.total += 1
            if decide(s) == oracle(s, family):
                t.agree += 1
            else:
                t.disagreements.append(s.name)
    morphisms = [*family_morphisms(family), *extra_morphisms]
    for m in morphisms:
        for key, (decide, oracle) in MORPHISM_CHECKS.items():
            t = tallies[key]
            t.total += 1
            if decide(m) == oracle(m, family):
                t.agree += 1
            else:
                t.disagreements.append(_describe(m))
    return OracleReport(family, tallies)
