"""Epi, mono, bi and isomorphisms of soft sets, with witness constructors.

Epi and mono are decided from the parameter map alone (surjective,
injective); the image subsets play no role. The counterexample and witness
constructors build the probe objects and morphisms explicitly so that
callers can re-check them against the definitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import SoftMorphism, SoftSet, compose, make_morphism, make_soft_set
from .errors import (
    AlreadyEpi,
    AlreadyMono,
    IncompatiblePair,
    MorphismsEqual,
    NotACoseparator,
    NotAnIsomorphism,
    NotASeparator,
    UniverseMismatch,
)
from .homs import ObjectFamily, enumerate_hom
from .objects import coseparator_witness_params, is_separator


@dataclass(frozen=True)
class MorphismClassification:
    subject: SoftMorphism
    is_epi: bool
    is_mono: bool
    is_bimorphism: bool
    is_iso: bool


@dataclass(frozen=True)
class CancellationCounterexample:
    """Two distinct morphisms that the subject fails to cancel.

    For an epi counterexample ``left`` and ``right`` go from the subject's
    target into ``auxiliary``; for a mono counterexample they go from
    ``auxiliary`` into the subject's source.
    """

    left: SoftMorphism
    right: SoftMorphism
    auxiliary: SoftSet


def is_epi(m: SoftMorphism) -> bool:
    return set(m.values) == set(m.target.params)


def is_mono(m: SoftMorphism) -> bool:
    return len(set(m.values)) == len(m.values)


def is_bimorphism(m: SoftMorphism) -> bool:
    return is_epi(m) and is_mono(m)


def _iso_failure(m: SoftMorphism) -> NotAnIsomorphism | None:
    if not is_mono(m):
        return NotAnIsomorphism("parameter map is not injective")
    if not is_epi(m):
        return NotAnIsomorphism("parameter map is not surjective")
    for a, img, b in zip(m.source.params, m.source.images, m.values):
        if img != m.target[b]:
            return NotAnIsomorphism(
                f"image of {a!r} differs from the image of {b!r} in the target", a
            )
    return None


def is_iso(m: SoftMorphism) -> bool:
    return _iso_failure(m) is None


def classify_morphism(m: SoftMorphism) -> MorphismClassification:
    epi, mono = is_epi(m), is_mono(m)
    return MorphismClassification(m, epi, mono, epi and mono, is_iso(m))


def invert(m: SoftMorphism) -> SoftMorphism:
    """Two-sided inverse of an isomorphism.

    Raises :class:`NotAnIsomorphism` naming the reason (and the offending
    parameter when image equality fails).
    """
    failure = _iso_failure(m)
    if failure is not None:
        raise failure
    back = {b: a for a, b in zip(m.source.params, m.values)}
    return make_morphism(m.target, back, m.source)


def epi_counterexample(m: SoftMorphism, name: str = "H") -> CancellationCounterexample:
    """Two maps into a two-parameter absolute soft set that agree after ``m``.

    The left map is constant at ``"0"``; the right one sends the image of
    ``m`` to ``"0"`` and everything else to ``"1"``.
    """
    if is_epi(m):
        raise AlreadyEpi(f"parameter map of {m!r} is surjective")
    u = m.source.universe
    aux = make_soft_set(u, name, [("0", u.full()), ("1", u.full())])
    hit = set(m.values)
    left = make_morphism(m.target, {b: "0" for b in m.target.params}, aux)
    right = make_morphism(m.target, {b: "0" if b in hit else "1" for b in m.target.params}, aux)
    return CancellationCounterexample(left, right, aux)


def mono_counterexample(m: SoftMorphism, name: str = "H") -> CancellationCounterexample:
    """Two maps out of a one-parameter null soft set that agree before ``m``.

    They pick out the first pair of source parameters (declared order)
    that ``m`` identifies.
    """
    if is_mono(m):
        raise AlreadyMono(f"parameter map of {m!r} is injective")
    first_seen: dict[str, str] = {}
    for a, b in zip(m.source.params, m.values):
        if b in first_seen:
            a1, a2 = first_seen[b], a
            break
        first_seen[b] = a
    u = m.source.universe
    aux = make_soft_set(u, name, [("c", u.empty())])
    left = make_morphism(aux, {"c": a1}, m.source)
    right = make_morphism(aux, {"c": a2}, m.source)
    return CancellationCounterexample(left, right, aux)


def _first_difference(alpha: SoftMorphism, beta: SoftMorphism, probe: SoftSet) -> str:
    if alpha.source.universe != probe.universe:
        raise UniverseMismatch(f"{probe.name!r} is not over the universe of the morphisms")
    if alpha.source != beta.source or alpha.target != beta.target:
        raise IncompatiblePair("morphisms do not share source and target")
    for a, x, y in zip(alpha.source.params, alpha.values, beta.values):
        if x != y:
            return a
    raise MorphismsEqual("the two morphisms are equal")


def separator_witness(sep: SoftSet, alpha: SoftMorphism, beta: SoftMorphism) -> SoftMorphism:
    """A morphism ``sep -> source`` that tells ``alpha`` and ``beta`` apart.

    Constant at the first source parameter where the two maps differ.
    """
    if not is_separator(sep):
        raise NotASeparator(f"{sep.name!r} is not a null soft set with a parameter")
    a = _first_difference(alpha, beta, sep)
    return make_morphism(sep, {c: a for c in sep.params}, alpha.source)


def coseparator_witness(cosep: SoftSet, alpha: SoftMorphism, beta: SoftMorphism) -> SoftMorphism:
    """A morphism ``target -> cosep`` that tells ``alpha`` and ``beta`` apart."""
    pair = coseparator_witness_params(cosep)
    if pair is None:
        raise NotACoseparator(f"{cosep.name!r} lacks two parameters with full image")
    c1, c2 = pair
    a1 = _first_difference(alpha, beta, cosep)
    hit = alpha(a1)
    return make_morphism(
        alpha.target, {b: c1 if b == hit else c2 for b in alpha.target.params}, cosep
    )


def _check_universe(m: SoftMorphism, family: ObjectFamily) -> None:
    if m.source.universe != family.universe:
        raise UniverseMismatch("morphism is not over the family's universe")


def oracle_is_epi(m: SoftMorphism, family: ObjectFamily) -> bool:
    """Right cancellability, checked against every member of ``family``."""
    _check_universe(m, family)
    for h in family:
        for beta, gamma in itertools.combinations(enumerate_hom(m.target, h), 2):
            if compose(beta, m) == compose(gamma, m):
                return False
    return True


def oracle_is_mono(m: SoftMorphism, family: ObjectFamily) -> bool:
    """Left cancellability, checked against every member of ``family``."""
    _check_universe(m, family)
    for h in family:
        for beta, gamma in itertools.combinations(enumerate_hom(h, m.source), 2):
            if compose(m, beta) == compose(m, gamma):
                return False
    return True
