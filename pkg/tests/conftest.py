import functools
import os

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from abelcodes.gfield import make_context
from abelcodes.orbits import orbit_partition
from abelcodes.transform import MultiPoly

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
    derandomize=True,
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (p, dims) pairs used across the property suites; m = 1 throughout
SETTINGS = [(2, (5, 7)), (3, (4, 5)), (5, (4, 6))]


@functools.cache
def ctx_for(p, dims, m=1):
    return make_context(p, m, dims)


@functools.cache
def partition(q, dims):
    return tuple(orbit_partition(q, dims))


def base_array(ctx, dims, draw_ints):
    """Map integers in [0, q) to encoded F_q elements."""
    base = np.array(ctx.base_field_elements(), dtype=np.int64)
    return base[np.asarray(draw_ints, dtype=np.int64).reshape(dims)]


@st.composite
def base_polys(draw, p, dims):
    """Random polynomials with coefficients in F_q."""
    ctx = ctx_for(p, dims)
    n = int(np.prod(dims))
    vals = draw(st.lists(st.integers(0, ctx.q - 1), min_size=n, max_size=n))
    return MultiPoly(ctx, base_array(ctx, dims, vals))


@st.composite
def field_polys(draw, p, dims):
    """Random polynomials with coefficients anywhere in the extension field."""
    ctx = ctx_for(p, dims)
    n = int(np.prod(dims))
    vals = draw(st.lists(st.integers(0, ctx.size - 1), min_size=n, max_size=n))
    return MultiPoly(ctx, np.array(vals, dtype=np.int64).reshape(dims))


@st.composite
def orbit_subsets(draw, q, dims, max_orbits=None, min_orbits=0):
    """A random union of q-orbits, returned as a list of orbits."""
    parts = partition(q, tuple(dims))
    hi = len(parts) if max_orbits is None else min(max_orbits, len(parts))
    k = draw(st.integers(min_orbits, hi))
    idx = draw(st.lists(st.integers(0, len(parts) - 1), min_size=k, max_size=k, unique=True))
    return [parts[i] for i in idx]
