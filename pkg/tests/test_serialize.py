"""File-format round trips: masks, kernels, pyramids, signals."""

import json
import os
from fractions import Fraction as F

import numpy as np
import pytest

from evenrev import ParameterError, bspline_mask, decompose, make_mask, pseudo_spline_mask
from evenrev.inverse import DecayCertificate, Kernel, even_inverse_spectral
from evenrev.serialize import (
    dump_json,
    fmt_float,
    kernel_from_obj,
    kernel_to_obj,
    load_json,
    mask_from_obj,
    mask_to_obj,
    pyramid_from_obj,
    pyramid_to_obj,
    signal_from_csv_text,
    signal_to_csv_text,
    write_text_atomic,
)


def test_fmt_float_roundtrip():
    for x in (1 / 3, 2.0, -1e-300, 4 / 3 * (-1 / 3) ** 7, np.pi):
        assert float(fmt_float(x)) == x


def test_rational_mask_roundtrip_is_lossless():
    m = pseudo_spline_mask(7, 2)
    obj = json.loads(dump_json(mask_to_obj(m)))
    back = mask_from_obj(obj)
    assert back == m
    assert back.is_rational


def test_float_mask_roundtrip_is_exact():
    m = make_mask(-2, [0.1, -1 / 3, 2.0000000001, 7e-13])
    back = mask_from_obj(json.loads(dump_json(mask_to_obj(m))))
    assert back.offset == m.offset
    assert all(a == b for a, b in zip(back.coeffs, m.coeffs))


def test_mask_obj_validation():
    with pytest.raises(ParameterError):
        mask_from_obj({"offset": 0, "num": [1, 2], "den": [3]})
    with pytest.raises(ParameterError):
        mask_from_obj({"offset": 0, "coeffs": []})


def test_kernel_roundtrip_with_certificate():
    kern = even_inverse_spectral(bspline_mask(4), tol=1e-12)
    assert kern.certificate is not None
    back = kernel_from_obj(json.loads(dump_json(kernel_to_obj(kern))))
    assert back.offset == kern.offset
    assert np.array_equal(back.coeffs, kern.coeffs)
    assert back.tol == kern.tol and back.source == kern.source
    assert back.certificate == kern.certificate


def test_kernel_roundtrip_without_certificate():
    kern = Kernel(1, np.array([0.25, -0.5]), 1e-9, "custom")
    back = kernel_from_obj(kernel_to_obj(kern))
    assert back.certificate is None
    assert np.array_equal(back.coeffs, kern.coeffs)


def test_certificate_fields_survive():
    cert = DecayCertificate(2.0, 1, 0.25, 0.25, 3.5, False)
    kern = Kernel(0, np.array([1.0]), 0.0, "custom", cert)
    back = kernel_from_obj(kernel_to_obj(kern))
    assert back.certificate == cert


def test_pyramid_roundtrip_full():
    rng = np.random.default_rng(0)
    c = rng.uniform(-1, 1, 64)
    pyr = decompose(c, bspline_mask(4), 3, mask_id="cubic")
    back = pyramid_from_obj(json.loads(dump_json(pyramid_to_obj(pyr))))
    assert back.mask_id == "cubic"
    assert np.array_equal(back.coarse, pyr.coarse)
    for a, b in zip(back.details, pyr.details):
        assert np.array_equal(a, b)


def test_pyramid_roundtrip_packed():
    rng = np.random.default_rng(1)
    c = rng.uniform(-1, 1, 64)
    pyr = decompose(c, bspline_mask(4), 3)
    obj = pyramid_to_obj(pyr, packed=True)
    assert obj["packed"] is True
    assert len(obj["details"][0]) == pyr.details[0].size // 2
    back = pyramid_from_obj(json.loads(dump_json(obj)))
    for a, b in zip(back.details, pyr.details):
        assert np.array_equal(a[1::2], b[1::2])
        assert np.count_nonzero(a[::2]) == 0
    # packing loses nothing the transform needs: evens were (near) zero anyway
    from evenrev import reconstruct

    assert np.max(np.abs(reconstruct(back, bspline_mask(4)) - c)) < 1e-10


def test_signal_csv_roundtrip():
    rng = np.random.default_rng(2)
    c = rng.uniform(-1, 1, 17)
    back = signal_from_csv_text(signal_to_csv_text(c))
    assert np.array_equal(back, c)
    with pytest.raises(ParameterError):
        signal_from_csv_text("\n\n")


def test_write_text_atomic(tmp_path):
    target = tmp_path / "out.json"
    write_text_atomic(str(target), "hello\n")
    assert target.read_text() == "hello\n"
    write_text_atomic(str(target), "replaced\n")
    assert target.read_text() == "replaced\n"
    leftovers = [p for p in os.listdir(tmp_path) if p.endswith(".tmp")]
    assert leftovers == []


def test_rational_json_layout():
    obj = mask_to_obj(make_mask(-1, [F(1, 4), F(3, 4)]))
    assert obj == {"offset": -1, "num": [1, 3], "den": [4, 4]}
