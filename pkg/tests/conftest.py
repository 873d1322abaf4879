import sys
from fractions import Fraction as F
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from illumcover.geometry import DegenerateInput, make_polygon  # noqa: E402

coord = st.fractions(min_value=-8, max_value=8, max_denominator=6)


@st.composite
def polygons(draw, min_points=3, max_points=8):
    pts = draw(st.lists(st.tuples(coord, coord), min_size=min_points, max_size=max_points, unique=True))
    try:
        return make_polygon(pts)
    except DegenerateInput:
        # collinear draw; fall back to a fixed triangle so the example is still useful
        return make_polygon([(F(0), F(0)), (F(1), F(0)), (F(0), F(1))])


@st.composite
def points_in(draw, K):
    """Exact convex combination of the vertices."""
    ws = draw(st.lists(st.integers(min_value=0, max_value=20), min_size=len(K), max_size=len(K)))
    if not any(ws):
        ws[0] = 1
    tot = sum(ws)
    return (sum(v[0] * F(w, tot) for v, w in zip(K.vertices, ws)),
            sum(v[1] * F(w, tot) for v, w in zip(K.vertices, ws)))
