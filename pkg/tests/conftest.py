import os

import hypothesis
import pytest
from hypothesis import strategies as st

from rmghw.gf import field_of_order

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9]


@pytest.fixture(params=SMALL_ORDERS, ids=lambda q: f"GF{q}")
def field(request):
    return field_of_order(request.param)


@st.composite
def field_and_elems(draw, n=3, orders=(2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64)):
    F = field_of_order(draw(st.sampled_from(orders)))
    elems = [draw(st.integers(0, F.q - 1)) for _ in range(n)]
    return F, elems


@st.composite
def matrices(draw, orders=(2, 3, 4, 5, 8), max_rows=6, max_cols=7):
    from rmghw.linalg import MatGF

    F = field_of_order(draw(st.sampled_from(orders)))
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = [[draw(st.integers(0, F.q - 1)) for _ in range(c)] for _ in range(r)]
    return MatGF.from_rows(F, rows)
