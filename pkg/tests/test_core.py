import pytest
from hypothesis import given
from hypothesis import strategies as st

from softcat import (
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
from softcat.errors import (
    CompositionMismatch,
    DuplicateElement,
    DuplicateParameter,
    ElementNotInUniverse,
    MapNotTotal,
    MapRangeInvalid,
    SoftConditionViolated,
    UniverseMismatch,
)

from strategies import U3, morphisms, soft, soft_sets


# -- universe and subsets --------------------------------------------------


def test_universe_rejects_duplicates():
    with pytest.raises(DuplicateElement):
        Universe(("u1", "u1"))


def test_subset_is_canonical(u2):
    s = u2.subset(["u2", "u1", "u2"])
    assert s == u2.subset(["u1", "u2"]) == u2.full()
    assert s.members == ("u1", "u2")
    assert repr(u2.subset(["u2"])) == "{u2}"
    assert "u2" in s and "u3" not in s


def test_subset_unknown_element(u2):
    with pytest.raises(ElementNotInUniverse):
        u2.subset(["u3"])


# -- make_soft_set ---------------------------------------------------------


def test_empty_soft_set(u2):
    s = make_soft_set(u2, "F", [])
    assert s.params == ()
    assert is_null(s) and is_absolute(s)


def test_two_parameter_soft_set(u2):
    s = make_soft_set(u2, "F", [("a1", {"u1"}), ("a2", set())])
    assert s.params == ("a1", "a2")
    assert s["a1"] == u2.subset(["u1"])
    assert s["a2"] == u2.empty()
    assert s.mapping == {"a1": u2.subset(["u1"]), "a2": u2.empty()}


def test_soft_set_params_keep_given_order(u2):
    s = make_soft_set(u2, "F", [("z", []), ("a", [])])
    assert s.params == ("z", "a")


def test_soft_set_element_not_in_universe():
    with pytest.raises(ElementNotInUniverse):
        make_soft_set(Universe(("u1",)), "F", [("a1", {"u2"})])


def test_soft_set_duplicate_parameter(u2):
    with pytest.raises(DuplicateParameter):
        make_soft_set(u2, "F", [("a1", []), ("a1", ["u1"])])


def test_soft_set_image_from_other_universe(u2):
    other = Universe(("v",))
    with pytest.raises(UniverseMismatch):
        make_soft_set(u2, "F", [("a1", other.full())])


def test_soft_set_equality_includes_name(u2):
    assert soft(u2, "F", ("a1", [])) != soft(u2, "G", ("a1", []))
    assert soft(u2, "F", ("a1", [])) == soft(u2, "F", ("a1", []))


# -- null / absolute -------------------------------------------------------


def test_is_null(u2):
    assert is_null(soft(u2, "F", ("a1", []), ("a2", [])))
    assert not is_null(soft(u2, "F", ("a1", ["u1"])))


def test_is_absolute(u2):
    assert is_absolute(soft(u2, "F", ("a1", ["u1", "u2"])))
    assert not is_absolute(soft(u2, "F", ("a1", ["u1"])))


# -- make_morphism ---------------------------------------------------------


def test_null_source_maps_anywhere(u2):
    f = soft(u2, "F", ("a1", []))
    g = soft(u2, "G", ("b1", ["u2"]))
    m = make_morphism(f, {"a1": "b1"}, g)
    assert m.map == {"a1": "b1"}
    assert m("a1") == "b1"


def test_soft_condition_violated(u2):
    f = soft(u2, "F", ("a1", ["u1", "u2"]))
    g = soft(u2, "G", ("b1", ["u1"]))
    with pytest.raises(SoftConditionViolated) as exc:
        make_morphism(f, {"a1": "b1"}, g)
    assert exc.value.param == "a1"


def test_soft_condition_reports_first_offender(u2):
    f = soft(u2, "F", ("a1", []), ("a2", ["u2"]), ("a3", ["u2"]))
    g = soft(u2, "G", ("b1", ["u1"]))
    with pytest.raises(SoftConditionViolated) as exc:
        make_morphism(f, {"a1": "b1", "a2": "b1", "a3": "b1"}, g)
    assert exc.value.param == "a2"


def test_soft_condition_holds(u2):
    f = soft(u2, "F", ("a1", ["u1"]))
    g = soft(u2, "G", ("b1", ["u1", "u2"]))
    assert make_morphism(f, {"a1": "b1"}, g).values == ("b1",)


def test_map_not_total(u2):
    f = soft(u2, "F", ("a1", []), ("a2", []))
    g = soft(u2, "G", ("b1", []))
    with pytest.raises(MapNotTotal):
        make_morphism(f, {"a1": "b1"}, g)
    with pytest.raises(MapNotTotal):
        make_morphism(f, {"a1": "b1", "a2": "b1", "zz": "b1"}, g)


def test_map_range_invalid(u2):
    f = soft(u2, "F", ("a1", []))
    g = soft(u2, "G", ("b1", []))
    with pytest.raises(MapRangeInvalid):
        make_morphism(f, {"a1": "b9"}, g)


def test_universe_mismatch(u2):
    f = soft(u2, "F", ("a1", []))
    g = soft(Universe(("v",)), "G", ("b1", []))
    with pytest.raises(UniverseMismatch):
        make_morphism(f, {"a1": "b1"}, g)


# -- identity / compose / equality ----------------------------------------


def test_identity_on_empty(u2):
    e = soft(u2, "E")
    assert identity(e).map == {}


def test_identity_map(u2):
    s = soft(u2, "F", ("a1", ["u1"]))
    assert identity(s).map == {"a1": "a1"}


def test_compose_mismatch(u2):
    f = soft(u2, "F", ("a1", []))
    g = soft(u2, "G", ("b1", []))
    m = make_morphism(f, {"a1": "b1"}, g)
    with pytest.raises(CompositionMismatch):
        compose(m, m)


def test_compose_values(u2):
    f = soft(u2, "F", ("a1", []), ("a2", ["u1"]))
    g = soft(u2, "G", ("b1", ["u1"]), ("b2", ["u1"]))
    h = soft(u2, "H", ("c1", ["u1", "u2"]))
    m1 = make_morphism(f, {"a1": "b2", "a2": "b1"}, g)
    m2 = make_morphism(g, {"b1": "c1", "b2": "c1"}, h)
    c = compose(m2, m1)
    assert c.source == f and c.target == h
    assert c.map == {"a1": "c1", "a2": "c1"}


def test_morphisms_equal(u2):
    f = soft(u2, "F", ("a1", []))
    g = soft(u2, "G", ("b1", []), ("b2", []))
    g2 = soft(u2, "G2", ("b1", []), ("b2", []))
    m = make_morphism(f, {"a1": "b1"}, g)
    assert morphisms_equal(m, m)
    assert not morphisms_equal(m, make_morphism(f, {"a1": "b2"}, g))
    # same map, different target: hom-sets are disjoint
    assert not morphisms_equal(m, make_morphism(f, {"a1": "b1"}, g2))


# -- properties ------------------------------------------------------------


@given(morphisms())
def test_validation_is_idempotent(m):
    check_soft_condition(m)
    assert make_morphism(m.source, m.map, m.target) == m


@given(morphisms())
def test_identity_laws(m):
    assert compose(identity(m.target), m) == m
    assert compose(m, identity(m.source)) == m


@st.composite
def composable_triples(draw):
    f = draw(morphisms(target_name="G", prefix="b"))
    g = draw(morphisms(source=f.target, target_name="H", prefix="c"))
    h = draw(morphisms(source=g.target, target_name="K", prefix="d"))
    return f, g, h


@given(composable_triples())
def test_associativity(triple):
    f, g, h = triple
    left = compose(h, compose(g, f))
    assert left == compose(compose(h, g), f)
    check_soft_condition(left)


@given(soft_sets(), soft_sets(name="G", prefix="b"))
def test_hom_sets_are_disjoint(s, t):
    # the empty map out of an empty soft set exists into both s and t;
    # the triples coincide only when the targets do
    e = make_soft_set(U3, "E", [])
    assert (make_morphism(e, {}, s) == make_morphism(e, {}, t)) == (s == t)
