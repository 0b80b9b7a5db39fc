import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from bvfrac.gridfn import (
    CORPUS,
    SENSES,
    CorpusError,
    GridFormatError,
    GridFunction,
    Rect,
    SampleError,
    corpus_eval,
    read_grid,
    sample,
    sample_corpus,
    weierstrass_1d,
    write_grid,
)
from oracles import weierstrass_mp

UNIT = Rect.unit()


def test_rect_rejects_empty_and_nonfinite():
    with pytest.raises(ValueError):
        Rect(1, 1, 0, 1)
    with pytest.raises(ValueError):
        Rect(0, math.inf, 0, 1)


def test_grid_layout_is_row_major():
    g = sample(lambda x, y: x + 10 * y, UNIT, 2, 1)
    assert g.z.shape == (2, 3)
    assert list(g.values) == [0, 0.5, 1, 10, 10.5, 11]
    assert g[2, 1] == 11


def test_grid_is_read_only():
    g = sample(lambda x, y: x, UNIT, 2, 2)
    with pytest.raises(ValueError):
        g.z[0, 0] = 3.0


def test_grid_rejects_nan_and_bad_shape():
    with pytest.raises(ValueError, match="index"):
        GridFunction(UNIT, 1, 1, [0.0, 1.0, math.nan, 2.0])
    with pytest.raises(ValueError):
        GridFunction(UNIT, 2, 2, [0.0] * 8)


@pytest.mark.parametrize(
    "ident, x, y, expected",
    [
        ("plane_indicator", 0.5, 0.5, 1.0),
        ("step_below_diagonal", 0.3, 0.7, 0.0),
        ("xsin_inv", 0.0, 0.4, 0.0),
    ],
)
def test_corpus_examples(ident, x, y, expected):
    assert corpus_eval(ident, None, x, y) == expected


def test_weierstrass_trivial_and_oracle():
    assert weierstrass_1d(1.5, 3, 0, 0.0) == 0.0
    got = weierstrass_1d(1.5, 3, 20, math.pi / 2)
    assert got == pytest.approx(weierstrass_mp(1.5, 3, 20, math.pi / 2), abs=1e-10)
    # sin(3^k π) is 0 only up to roundoff in double precision; compare to direct summation
    direct = sum(3 ** (-0.5 * k) * math.sin(3**k * math.pi) for k in range(6))
    assert weierstrass_1d(1.5, 3, 5, math.pi) == pytest.approx(direct, abs=1e-12)
    assert abs(direct) < 1e-12


@pytest.mark.parametrize("s, lam, K", [(1.0, 3, 5), (2.0, 3, 5), (1.5, 1.0, 5), (1.5, 3, -1), (1.5, 3, 2.5)])
def test_weierstrass_parameter_validation(s, lam, K):
    with pytest.raises(CorpusError):
        weierstrass_1d(s, lam, K, 0.0)


def test_sample_examples():
    assert list(sample(lambda x, y: 7.0, UNIT, 1, 1).values) == [7.0] * 4
    assert list(sample(lambda x, y: x + y, UNIT, 2, 2).values) == [0, 0.5, 1, 0.5, 1, 1.5, 1, 1.5, 2]
    assert list(sample_corpus("plane_indicator", 2).values) == [0, 0, 1, 0, 1, 0, 1, 0, 0]


def test_sample_reports_failing_node():
    def f(x, y):
        if x == 0.5 and y == 1.0:
            raise ZeroDivisionError("boom")
        return x

    with pytest.raises(SampleError) as info:
        sample(f, UNIT, 2, 2)
    assert (info.value.x, info.value.y) == (0.5, 1.0)


def test_sample_reports_nonfinite_node():
    with pytest.raises(SampleError, match="non-finite"):
        sample(lambda x, y: 1.0 / x, UNIT, 2, 2)


def test_corpus_metadata_is_complete():
    for e in CORPUS.values():
        assert set(e.expected) == set(SENSES)
        assert set(e.expected.values()) <= {"bounded", "unbounded"}


def test_corpus_unknown_id_and_param():
    with pytest.raises(CorpusError):
        sample_corpus("nope", 2)
    with pytest.raises(CorpusError):
        sample_corpus("plane", 2, params={"zz": 1})
    with pytest.raises(CorpusError):
        sample_corpus("weierstrass_cylinder", 2, params={"s": 2.5})


@given(st.integers(-40, 40), st.integers(1, 40), st.integers(-40, 40), st.integers(1, 40))
def test_plane_indicator_exact_on_rationals(p, q, r, s):
    x, y = Fraction(p, q), Fraction(r, s)
    expected = 1.0 if x + y == 1 else 0.0
    assert corpus_eval("plane_indicator", None, x, y) == expected


def test_plane_indicator_on_float_lattice():
    g = sample_corpus("plane_indicator", 64)
    i, j = np.meshgrid(np.arange(65), np.arange(65))
    assert np.array_equal(g.z == 1.0, i + j == 64)


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_round_trip_example(tmp_path, fmt):
    g = sample_corpus("plane_indicator", 2)
    path = tmp_path / f"g.{fmt}"
    write_grid(g, path)
    h = read_grid(path)
    assert h.rect == g.rect and (h.m, h.n) == (g.m, g.n)
    assert np.array_equal(h.z, g.z)


grids = st.tuples(st.integers(1, 6), st.integers(1, 6)).flatmap(
    lambda mn: st.builds(
        lambda v, r: GridFunction(r, mn[0], mn[1], v),
        arrays(np.float64, (mn[1] + 1, mn[0] + 1), elements=st.floats(-1e6, 1e6, allow_nan=False)),
        st.sampled_from([UNIT, Rect(-1.5, 2.25, 0.1, 0.3)]),
    )
)


@settings(max_examples=60, deadline=None)
@given(grids, st.sampled_from(["json", "csv"]))
def test_round_trip_identity(tmp_path_factory, g, fmt):
    path = tmp_path_factory.mktemp("rt") / f"g.{fmt}"
    write_grid(g, path)
    h = read_grid(path)
    assert h.rect == g.rect and (h.m, h.n) == (g.m, g.n)
    assert np.array_equal(h.z, g.z)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(CORPUS)), st.integers(1, 17), st.integers(1, 17))
def test_sample_is_deterministic(ident, m, n):
    assert np.array_equal(sample_corpus(ident, m, n).z, sample_corpus(ident, m, n).z)


def test_read_length_mismatch(tmp_path):
    path = tmp_path / "g.json"
    doc = sample_corpus("plane", 2).to_dict()
    doc["values"] = doc["values"][:-1]
    path.write_text(json.dumps(doc))
    with pytest.raises(GridFormatError, match="length mismatch"):
        read_grid(path)


def test_read_non_numeric_token_names_index(tmp_path):
    path = tmp_path / "g.json"
    doc = sample_corpus("plane", 2).to_dict()
    doc["values"][4] = "abc"
    path.write_text(json.dumps(doc))
    with pytest.raises(GridFormatError, match="index 4"):
        read_grid(path)
    csv_path = tmp_path / "g.csv"
    csv_path.write_text("a,b,c,d,m,n\n0,1,0,1,1,1\n0,1\n2,x\n")
    with pytest.raises(GridFormatError, match="'x' at value index 3"):
        read_grid(csv_path)


def test_read_rejects_nonfinite_and_binary_formats(tmp_path):
    path = tmp_path / "g.csv"
    path.write_text("a,b,c,d,m,n\n0,1,0,1,1,1\n0,1\n2,inf\n")
    with pytest.raises(GridFormatError, match="non-finite"):
        read_grid(path)
    with pytest.raises(GridFormatError):
        read_grid(tmp_path / "g.npy")


def test_coarsen_keeps_every_kth_node():
    g = sample(lambda x, y: x + 2 * y, UNIT, 8, 4)
    c = g.coarsen(2)
    assert (c.m, c.n) == (4, 2)
    assert np.array_equal(c.z, g.z[::2, ::2])
    with pytest.raises(ValueError):
        g.coarsen(3)
