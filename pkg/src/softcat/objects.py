"""Initial, terminal, zero objects, separators and co-separators.

Each property has a decision procedure read off its characterization and
an oracle that checks the categorical definition directly, quantifying
over a finite :class:`~softcat.homs.ObjectFamily` in place of all soft
sets over the universe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import SoftSet, compose, is_absolute, is_null
from .errors import UniverseMismatch
from .homs import ObjectFamily, enumerate_hom


@dataclass(frozen=True)
class ObjectClassification:
    subject: SoftSet
    is_initial: bool
    is_terminal: bool
    is_zero: bool
    is_separator: bool
    is_coseparator: bool
    coseparator_witness_params: tuple[str, str] | None = None


def is_initial(s: SoftSet) -> bool:
    return not s.params


def is_terminal(s: SoftSet) -> bool:
    return len(s.params) == 1 and is_absolute(s)


def is_zero(s: SoftSet) -> bool:
    # never true: initial needs no parameters, terminal needs exactly one
    return is_initial(s) and is_terminal(s)


def is_separator(s: SoftSet) -> bool:
    return bool(s.params) and is_null(s)


def coseparator_witness_params(s: SoftSet) -> tuple[str, str] | None:
    """First two distinct parameters (declared order) whose image is the whole universe."""
    full = s.universe.full_mask
    hits = [p for p, img in zip(s.params, s.images) if img.mask == full]
    if len(hits) < 2:
        return None
    return hits[0], hits[1]


def is_coseparator(s: SoftSet) -> bool:
    return coseparator_witness_params(s) is not None


def classify_object(s: SoftSet) -> ObjectClassification:
    return ObjectClassification(
        subject=s,
        is_initial=is_initial(s),
        is_terminal=is_terminal(s),
        is_zero=is_zero(s),
        is_separator=is_separator(s),
        is_coseparator=is_coseparator(s),
        coseparator_witness_params=coseparator_witness_params(s),
    )


def _check_universe(s: SoftSet, family: ObjectFamily) -> None:
    if s.universe != family.universe:
        raise UniverseMismatch(f"soft set {s.name!r} is not over the family's universe")


def oracle_is_initial(s: SoftSet, family: ObjectFamily) -> bool:
    _check_universe(s, family)
    return all(len(enumerate_hom(s, g)) == 1 for g in family)


def oracle_is_terminal(s: SoftSet, family: ObjectFamily) -> bool:
    _check_universe(s, family)
    return all(len(enumerate_hom(g, s)) == 1 for g in family)


def oracle_is_zero(s: SoftSet, family: ObjectFamily) -> bool:
    return oracle_is_initial(s, family) and oracle_is_terminal(s, family)


def _distinct_parallel_pairs(family: ObjectFamily):
    for f, g in itertools.product(family, repeat=2):
        for alpha, beta in itertools.combinations(enumerate_hom(f, g), 2):
            yield alpha, beta


def oracle_is_separator(s: SoftSet, family: ObjectFamily) -> bool:
    _check_universe(s, family)
    for alpha, beta in _distinct_parallel_pairs(family):
        probes = enumerate_hom(s, alpha.source)
        if not any(compose(alpha, h) != compose(beta, h) for h in probes):
            return False
    return True


def oracle_is_coseparator(s: SoftSet, family: ObjectFamily) -> bool:
    _check_universe(s, family)
    for alpha, beta in _distinct_parallel_pairs(family):
        probes = enumerate_hom(alpha.target, s)
        if not any(compose(k, alpha) != compose(k, beta) for k in probes):
            return False
    return True


def oracle_classify_object(s: SoftSet, family: ObjectFamily) -> ObjectClassification:
    initial = oracle_is_initial(s, family)
    terminal = oracle_is_terminal(s, family)
    return ObjectClassification(
        subject=s,
        is_initial=initial,
        is_terminal=terminal,
        is_zero=initial and terminal,
        is_separator=oracle_is_separator(s, family),
        is_coseparator=oracle_is_coseparator(s, family),
    )
