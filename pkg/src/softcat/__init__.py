"""Special objects and morphisms in the category of soft sets over a finite universe."""

from .core import (
    SoftMorphism,
    SoftSet,
    Subset,
    Universe,
    check_soft_condition,
    compose,
    identity,
    is_absolute,
    is_null,
    make_morphism,
    make_soft_set,
    morphisms_equal,
)
from .homs import ObjectFamily, enumerate_hom, generate_object_family, hom_count
from .morphisms import (
    CancellationCounterexample,
    MorphismClassification,
    classify_morphism,
    coseparator_witness,
    epi_counterexample,
    invert,
    is_bimorphism,
    is_epi,
    is_iso,
    is_mono,
    mono_counterexample,
    oracle_is_epi,
    oracle_is_mono,
    separator_witness,
)
from .objects import (
    ObjectClassification,
    classify_object,
    is_coseparator,
    is_initial,
    is_separator,
    is_terminal,
    is_zero,
    oracle_is_coseparator,
    oracle_is_initial,
    oracle_is_separator,
    oracle_is_terminal,
)
from .workspace import Workspace, parse_workspace, print_workspace

__version__ = "0.1.0"
