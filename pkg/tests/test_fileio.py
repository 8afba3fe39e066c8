import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra import numpy as hnp

from conftest import PUBLISHED_NORM_MX
from weibull_edges.errors import KernelFormatError, PgmFormatError, TrailingDataWarning, UnsupportedFormatError
from weibull_edges.fileio import atomic_write, read_kernel_text, read_pgm, write_kernel_text, write_pgm
from weibull_edges.kernel import Kernel
from weibull_edges.masks import weibull_gradient_pair
from weibull_edges.weibull import WeibullParams

images = hnp.arrays(np.uint8, hnp.array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=12))


def test_read_minimal_p2():
    np.testing.assert_array_equal(read_pgm(b"P2\n2 1\n255\n0 255\n"), [[0, 255]])


def test_read_p5():
    img = read_pgm(b"P5\n2 2\n255\n" + bytes([0x00, 0x7F, 0x80, 0xFF]))
    np.testing.assert_array_equal(img, [[0, 127], [128, 255]])
    assert img.dtype == np.uint8


def test_header_comments():
    data = b"P2\n# made by hand\n3 # width\n1\n# maxval next\n255\n1 2 3\n"
    np.testing.assert_array_equal(read_pgm(data), [[1, 2, 3]])


def test_small_maxval_kept_verbatim():
    np.testing.assert_array_equal(read_pgm(b"P2\n2 1\n15\n3 15\n"), [[3, 15]])


def test_rejects_color():
    with pytest.raises(UnsupportedFormatError):
        read_pgm(b"P3\n1 1\n255\n0 0 0\n")


@pytest.mark.parametrize(
    "data, field",
    [
        (b"XX\n1 1\n255\n0", "magic"),
        (b"P5\n0 1\n255\n", "width"),
        (b"P5\n1 0\n255\n", "height"),
        (b"P5\n1 1\n256\n\x00", "maxval"),
        (b"P5\n1 1\n0\n\x00", "maxval"),
        (b"P5\n2 2\n255\n\x00\x01", "pixels"),
        (b"P2\n2 2\n255\n1 2 3", "pixels"),
        (b"P2\n2\n", "height"),
        (b"P2\nab 2\n255\n", "width"),
        (b"P2\n1 1\n10\n11\n", "pixels"),
    ],
)
def test_parse_errors_name_field(data, field):
    with pytest.raises(PgmFormatError, match=field):
        read_pgm(data)


def test_truncated_reports_offset():
    with pytest.raises(PgmFormatError, match="byte 13"):
        read_pgm(b"P5\n2 2\n255\n\x00\x01")


def test_trailing_bytes_warn():
    with pytest.warns(TrailingDataWarning):
        img = read_pgm(b"P5\n1 1\n255\n\x05\x06\x07")
    np.testing.assert_array_equal(img, [[5]])


def test_write_1x1_p5():
    assert write_pgm(np.array([[42]], dtype=np.uint8), "P5") == b"P5\n1 1\n255\n\x2a"


def test_write_p2_layout():
    assert write_pgm(np.array([[1, 2], [3, 4]], dtype=np.uint8), "P2") == b"P2\n2 2\n255\n1 2\n3 4\n"


def test_edge_map_encoding():
    data = write_pgm(np.array([[True, False]]))
    assert data.endswith(b"\xff\x00")


@given(images, st.sampled_from(["P2", "P5"]))
def test_pgm_roundtrip(img, variant):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        back = read_pgm(write_pgm(img, variant))
    assert back.dtype == np.uint8
    np.testing.assert_array_equal(back, img)


@given(images)
def test_p5_deterministic(img):
    assert write_pgm(img, "P5") == write_pgm(img.copy(), "P5")


def test_kernel_roundtrip_published_mask():
    mx, _ = weibull_gradient_pair(WeibullParams(1, 2))
    back = read_kernel_text(write_kernel_text(mx))
    np.testing.assert_allclose(back.coefficients, mx.coefficients, atol=1e-8, rtol=0)
    np.testing.assert_allclose(back.coefficients, PUBLISHED_NORM_MX[2.0], atol=5e-4)
    assert (back.kind, back.normalized) == (mx.kind, mx.normalized)
    assert back.metadata == mx.metadata


def test_kernel_metadata_order_and_stable_bytes():
    k = Kernel(np.eye(3), "smoothing", False, ("first line", "second line", "third"))
    text = write_kernel_text(k)
    back = read_kernel_text(text)
    assert back.metadata == ("first line", "second line", "third")
    assert write_kernel_text(back) == text
    assert text.splitlines()[:2] == [b"# kind smoothing", b"# normalized false"]


def test_kernel_format_nine_digits():
    text = write_kernel_text(Kernel([[1 / 3]], "gradient-x")).decode()
    assert "0.333333333" in text and "0.3333333333" not in text


@pytest.mark.parametrize(
    "text",
    [
        "# kind smoothing\nsize 3\n1 0 0\n0 1\n0 0 1\n",
        "# kind smoothing\nsize x\n1\n",
        "# kind smoothing\n1 0 0\n",
        "# kind smoothing\nsize 2\n1 0\n",
        "size 1\n1\n",
        "# kind smoothing\nsize 1\nabc\n",
    ],
)
def test_kernel_parse_errors(text):
    with pytest.raises(KernelFormatError):
        read_kernel_text(text.encode())


def test_atomic_write(tmp_path):
    target = tmp_path / "a.bin"
    atomic_write(target, b"abc")
    assert target.read_bytes() == b"abc"
    assert [p.name for p in tmp_path.iterdir()] == ["a.bin"]
