import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treehue.color_space import (
    GamutCheck,
    HclColor,
    LabColor,
    SrgbColor,
    check_gamut,
    delta_e,
    from_hex,
    hcl_in_gamut,
    hcl_to_lab,
    lab_to_hcl,
    lab_to_srgb,
    srgb_to_lab,
    to_hex,
)

# Frozen oracle values for sRGB red, computed independently at high precision
# from the published sRGB->XYZ(D65)->Lab formulas before implementation.
RED_LAB = (53.24079183, 80.09246954, 67.20319254)
RED_HCL = (39.99900544, 104.55177074, 53.24079183)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestTypes:
    def test_srgb_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            SrgbColor(1.2, 0, 0)
        with pytest.raises(ValueError):
            SrgbColor(0, -0.1, 0)

    def test_lab_rejects_bad_lightness(self):
        with pytest.raises(ValueError):
            LabColor(101, 0, 0)

    def test_hcl_rejects_invalid(self):
        with pytest.raises(ValueError):
            HclColor(360.0, 10, 50)
        with pytest.raises(ValueError):
            HclColor(0, -1, 50)
        with pytest.raises(ValueError):
            HclColor(0, 10, 120)


class TestSrgbToLab:
    def test_white_is_reference(self):
        lab = srgb_to_lab(SrgbColor(1, 1, 1))
        assert lab.l == pytest.approx(100.0, abs=1e-6)
        assert lab.a == pytest.approx(0.0, abs=1e-6)
        assert lab.b == pytest.approx(0.0, abs=1e-6)

    def test_black_is_origin(self):
        lab = srgb_to_lab(SrgbColor(0, 0, 0))
        assert (lab.l, lab.a, lab.b) == (0.0, 0.0, 0.0)

    def test_red_matches_oracle(self):
        lab = srgb_to_lab(SrgbColor(1, 0, 0))
        assert lab.l == pytest.approx(RED_LAB[0], abs=1e-6)
        assert lab.a == pytest.approx(RED_LAB[1], abs=1e-6)
        assert lab.b == pytest.approx(RED_LAB[2], abs=1e-6)


class TestLabToSrgb:
    def test_white_round_trip(self):
        srgb, in_gamut = lab_to_srgb(LabColor(100, 0, 0))
        assert in_gamut
        for ch in (srgb.r, srgb.g, srgb.b):
            assert ch == pytest.approx(1.0, abs=1e-6)

    def test_black_round_trip(self):
        srgb, in_gamut = lab_to_srgb(LabColor(0, 0, 0))
        assert in_gamut
        assert (srgb.r, srgb.g, srgb.b) == (0.0, 0.0, 0.0)

    def test_high_chroma_out_of_gamut(self):
        # oracle: linear red channel reaches ~1.64 at Lab(50, 150, 0)
        _, in_gamut = lab_to_srgb(LabColor(50, 150, 0))
        assert not in_gamut

    @settings(max_examples=200)
    @given(unit, unit, unit)
    def test_round_trip_in_gamut(self, r, g, b):
        src = SrgbColor(r, g, b)
        out, in_gamut = lab_to_srgb(srgb_to_lab(src))
        assert in_gamut
        assert out.r == pytest.approx(r, abs=1e-6)
        assert out.g == pytest.approx(g, abs=1e-6)
        assert out.b == pytest.approx(b, abs=1e-6)


class TestCylindrical:
    def test_red_to_hcl(self):
        hcl = lab_to_hcl(LabColor(*RED_LAB))
        assert hcl.h == pytest.approx(RED_HCL[0], abs=1e-4)
        assert hcl.c == pytest.approx(RED_HCL[1], abs=1e-4)
        assert hcl.l == pytest.approx(RED_HCL[2], abs=1e-9)

    def test_achromatic_hue_canonicalized(self):
        hcl = lab_to_hcl(LabColor(70, 0, 0))
        assert (hcl.h, hcl.c, hcl.l) == (0.0, 0.0, 70.0)

    def test_hcl_to_lab_at_90_degrees(self):
        lab = hcl_to_lab(HclColor(90, 30, 60))
        assert lab.l == 60
        assert lab.a == pytest.approx(0.0, abs=1e-9)
        assert lab.b == pytest.approx(30.0, abs=1e-9)

    @settings(max_examples=200)
    @given(
        st.floats(min_value=0, max_value=100, allow_nan=False),
        st.floats(min_value=-120, max_value=120, allow_nan=False),
        st.floats(min_value=-120, max_value=120, allow_nan=False),
    )
    def test_round_trip(self, l, a, b):
        lab = LabColor(l, a, b)
        if math.hypot(a, b) <= 1e-6:
            return
        back = hcl_to_lab(lab_to_hcl(lab))
        assert back.l == pytest.approx(l, abs=1e-9)
        assert back.a == pytest.approx(a, abs=1e-9)
        assert back.b == pytest.approx(b, abs=1e-9)


class TestCheckGamut:
    def test_mid_gray_in_gamut(self):
        check = check_gamut(HclColor(0, 0, 50))
        assert check == GamutCheck(True, HclColor(0, 0, 50), 0.0)

    def test_white_in_gamut(self):
        assert check_gamut(HclColor(200, 0, 100)).in_gamut

    def test_clamp_against_scan_oracle(self):
        # oracle: scan chroma upward in 0.01 steps for the gamut boundary
        target = HclColor(0, 150, 50)
        boundary = 0.0
        c = 0.0
        while c <= 150.0:
            if hcl_in_gamut(HclColor(0, c, 50)):
                boundary = c
            c += 0.01
        check = check_gamut(target)
        assert not check.in_gamut
        assert check.clamped.h == target.h
        assert check.clamped.l == target.l
        assert check.clamped.c < target.c
        assert check.clamped.c == pytest.approx(boundary, abs=0.02)
        assert check.clamp_distance == pytest.approx(target.c - check.clamped.c, abs=1e-6)

    @settings(max_examples=100)
    @given(
        st.floats(min_value=0, max_value=359.99, allow_nan=False),
        st.floats(min_value=0, max_value=180, allow_nan=False),
        st.floats(min_value=0, max_value=100, allow_nan=False),
    )
    def test_clamp_monotone_and_idempotent(self, h, c, l):
        check = check_gamut(HclColor(h, c, l))
        assert check.clamped.h == pytest.approx(h, abs=1e-9)
        assert check.clamped.l == pytest.approx(l, abs=1e-9)
        assert check.clamped.c <= c
        assert check_gamut(check.clamped).in_gamut
        if check.in_gamut:
            assert check.clamp_distance == 0.0


class TestDeltaE:
    def test_identical_zero(self):
        assert delta_e(LabColor(50, 10, -3), LabColor(50, 10, -3)) == 0.0

    def test_single_axis(self):
        assert delta_e(LabColor(0, 0, 0), LabColor(100, 0, 0)) == 100.0

    def test_black_vs_red(self):
        d = delta_e(LabColor(0, 0, 0), LabColor(*RED_LAB))
        assert d == pytest.approx(117.3271233, abs=1e-4)


class TestHex:
    @pytest.mark.parametrize(
        "color,expected",
        [
            (SrgbColor(1, 0, 0), "#ff0000"),
            (SrgbColor(0, 0, 0), "#000000"),
            (SrgbColor(0.5, 0.5, 0.5), "#808080"),
        ],
    )
    def test_to_hex(self, color, expected):
        assert to_hex(color) == expected

    def test_from_hex_round_trip(self):
        assert to_hex(from_hex("#3d8dd7")) == "#3d8dd7"
