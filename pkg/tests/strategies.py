"""Hypothesis strategies and small constructors shared by the tests."""

from hypothesis import strategies as st

from softcat import Universe, make_morphism, make_soft_set


def soft(u, name, *pairs):
    return make_soft_set(u, name, list(pairs))


U3 = Universe(("x", "y", "z"))


@st.composite
def soft_sets(draw, universe=U3, name="F", prefix="a", max_params=4):
    k = draw(st.integers(0, max_params))
    masks = draw(st.lists(st.integers(0, universe.full_mask), min_size=k, max_size=k))
    return make_soft_set(
        universe, name, [(f"{prefix}{i}", universe.from_mask(m)) for i, m in enumerate(masks)]
    )


@st.composite
def morphisms(draw, source=None, target_name="G", prefix="b"):
    """A valid morphism: pick the map first, then enlarge target images to fit."""
    u = U3
    if source is None:
        source = draw(soft_sets(name="F", prefix="a"))
    n_target = draw(st.integers(1 if source.params else 0, 4))
    tparams = [f"{prefix}{i}" for i in range(n_target)]
    values = [draw(st.sampled_from(tparams)) for _ in source.params]
    extra = draw(st.lists(st.integers(0, u.full_mask), min_size=n_target, max_size=n_target))
    tmasks = list(extra)
    for img, b in zip(source.images, values):
        tmasks[tparams.index(b)] |= img.mask
    target = make_soft_set(u, target_name, [(b, u.from_mask(m)) for b, m in zip(tparams, tmasks)])
    return make_morphism(source, dict(zip(source.params, values)), target)
