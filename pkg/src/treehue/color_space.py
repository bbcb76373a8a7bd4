"""Conversions among sRGB, CIELab and HCL, with sRGB gamut handling.

All conversions use the D65 reference white (2 degree observer) and the
standard sRGB transfer function with its linear segment. HCL is the
cylindrical form of CIELab: hue angle, chroma radius, luminance height.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# sRGB <-> XYZ matrices (D65, 2deg observer); rows normalized so that
# sRGB white maps exactly onto the reference white
_SRGB_TO_XYZ = (
    (0.4124564, 0.3575761, 0.1804375),
    (0.21267287873271213, 0.71515212848478715, 0.072174992782500722),
    (0.0193339, 0.1191920, 0.9503041),
)
_XYZ_TO_SRGB = (
    (3.2404548360214085, -1.5371390038164601, -0.49853154686848087),
    (-0.96926638987565377, 1.8760111164435841, 0.041556082346673527),
    (0.055643419604213657, -0.20402587467028356, 1.0572251624579288),
)
_WHITE = (0.95047, 1.0, 1.08883)

# Linear channels may exceed [0, 1] by this much and still count as in gamut.
GAMUT_EPSILON = 1e-9
# Hues are meaningless below this chroma; canonicalized to 0.
ACHROMATIC_CHROMA = 1e-9
# Absolute chroma tolerance of the gamut-boundary bisection.
CLAMP_TOLERANCE = 1e-4


@dataclass(frozen=True)
class SrgbColor:
    """Gamma-encoded sRGB with channels in [0, 1]."""

    r: float
    g: float
    b: float

    def __post_init__(self):
        for name in ("r", "g", "b"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"sRGB channel {name}={v} outside [0, 1]")


@dataclass(frozen=True)
class LabColor:
    """CIELab: lightness l in [0, 100], signed opponent axes a, b."""

    l: float
    a: float
    b: float

    def __post_init__(self):
        if not 0.0 <= self.l <= 100.0:
            raise ValueError(f"Lab lightness {self.l} outside [0, 100]")


@dataclass(frozen=True)
class HclColor:
    """Cylindrical Lab: hue in degrees [0, 360), chroma >= 0, luminance [0, 100]."""

    h: float
    c: float
    l: float

    def __post_init__(self):
        if not 0.0 <= self.h < 360.0:
            raise ValueError(f"hue {self.h} outside [0, 360)")
        if self.c < 0.0:
            raise ValueError(f"chroma {self.c} negative")
        if not 0.0 <= self.l <= 100.0:
            raise ValueError(f"luminance {self.l} outside [0, 100]")


@dataclass(frozen=True)
class GamutCheck:
    """Result of testing an HCL color against the sRGB gamut."""

    in_gamut: bool
    clamped: HclColor
    clamp_distance: float


def _to_linear(c: float) -> float:
    if c <= 0.04045:
        return c / 12.92
    return ((c + 0.055) / 1.055) ** 2.4


def _to_gamma(c: float) -> float:
    if c <= 0.0031308:
        return 12.92 * c
    return 1.055 * c ** (1.0 / 2.4) - 0.055


def _lab_f(t: float) -> float:
    delta = 6.0 / 29.0
    if t > delta**3:
        return t ** (1.0 / 3.0)
    return t / (3.0 * delta * delta) + 4.0 / 29.0


def _lab_f_inv(t: float) -> float:
    delta = 6.0 / 29.0
    if t > delta:
        return t**3
    return 3.0 * delta * delta * (t - 4.0 / 29.0)


# Unrolled constants for the scalar fast path used by the gamut bisection.
(_M00, _M01, _M02), (_M10, _M11, _M12), (_M20, _M21, _M22) = _XYZ_TO_SRGB
_WX, _WY, _WZ = _WHITE
_DELTA = 6.0 / 29.0
_DELTA_SLOPE = 3.0 * _DELTA * _DELTA
_DELTA_OFFSET = 4.0 / 29.0


def _hcl_linear_in_gamut(cos_h: float, sin_h: float, c: float, l: float) -> bool:
    """Gamut test on raw floats; arithmetic matches hcl_to_lab + _lab_to_linear."""
    fy = (l + 16.0) / 116.0
    fx = fy + (c * cos_h) / 500.0
    fz = fy - (c * sin_h) / 200.0
    x = _WX * (fx**3 if fx > _DELTA else _DELTA_SLOPE * (fx - _DELTA_OFFSET))
    y = _WY * (fy**3 if fy > _DELTA else _DELTA_SLOPE * (fy - _DELTA_OFFSET))
    z = _WZ * (fz**3 if fz > _DELTA else _DELTA_SLOPE * (fz - _DELTA_OFFSET))
    lo, hi = -GAMUT_EPSILON, 1.0 + GAMUT_EPSILON
    return (
        lo <= _M00 * x + _M01 * y + _M02 * z <= hi
        and lo <= _M10 * x + _M11 * y + _M12 * z <= hi
        and lo <= _M20 * x + _M21 * y + _M22 * z <= hi
    )


def srgb_to_lab(c: SrgbColor) -> LabColor:
    """Convert sRGB to CIELab under D65."""
    rl, gl, bl = _to_linear(c.r), _to_linear(c.g), _to_linear(c.b)
    xyz = tuple(m[0] * rl + m[1] * gl + m[2] * bl for m in _SRGB_TO_XYZ)
    fx = _lab_f(xyz[0] / _WHITE[0])
    fy = _lab_f(xyz[1] / _WHITE[1])
    fz = _lab_f(xyz[2] / _WHITE[2])
    l = 116.0 * fy - 16.0
    return LabColor(min(max(l, 0.0), 100.0), 500.0 * (fx - fy), 200.0 * (fy - fz))


def _lab_to_linear(c: LabColor) -> tuple[float, float, float]:
    fy = (c.l + 16.0) / 116.0
    fx = fy + c.a / 500.0
    fz = fy - c.b / 200.0
    x = _WHITE[0] * _lab_f_inv(fx)
    y = _WHITE[1] * _lab_f_inv(fy)
    z = _WHITE[2] * _lab_f_inv(fz)
    return tuple(m[0] * x + m[1] * y + m[2] * z for m in _XYZ_TO_SRGB)


def lab_to_srgb(c: LabColor) -> tuple[SrgbColor, bool]:
    """Convert Lab to sRGB; the flag is False when the color lies outside the gamut.

    Out-of-range channels are clamped to [0, 1] in the returned color.
    """
    linear = _lab_to_linear(c)
    in_gamut = all(-GAMUT_EPSILON <= v <= 1.0 + GAMUT_EPSILON for v in linear)
    channels = [_to_gamma(min(max(v, 0.0), 1.0)) for v in linear]
    channels = [min(max(v, 0.0), 1.0) for v in channels]
    return SrgbColor(*channels), in_gamut


def lab_to_hcl(c: LabColor) -> HclColor:
    """Cylindrical transformation of Lab; achromatic hue canonicalized to 0."""
    chroma = math.hypot(c.a, c.b)
    if chroma < ACHROMATIC_CHROMA:
        return HclColor(0.0, chroma, c.l)
    hue = math.degrees(math.atan2(c.b, c.a)) % 360.0
    if hue >= 360.0:  # % can round a tiny negative angle up to 360 exactly
        hue = 0.0
    return HclColor(hue, chroma, c.l)


def hcl_to_lab(c: HclColor) -> LabColor:
    rad = math.radians(c.h)
    return LabColor(c.l, c.c * math.cos(rad), c.c * math.sin(rad))


def hcl_in_gamut(c: HclColor) -> bool:
    rad = math.radians(c.h)
    return _hcl_linear_in_gamut(math.cos(rad), math.sin(rad), c.c, c.l)


def check_gamut(c: HclColor) -> GamutCheck:
    """Test against sRGB; out-of-gamut colors are clamped by chroma bisection.

    The clamp keeps hue and luminance fixed and bisects chroma down to the
    gamut boundary, so clamping only ever reduces chroma.
    """
    rad = math.radians(c.h)
    cos_h, sin_h = math.cos(rad), math.sin(rad)
    if _hcl_linear_in_gamut(cos_h, sin_h, c.c, c.l):
        return GamutCheck(True, c, 0.0)
    lo, hi = 0.0, c.c  # the achromatic axis is always inside the gamut
    while hi - lo > CLAMP_TOLERANCE:
        mid = 0.5 * (lo + hi)
        if _hcl_linear_in_gamut(cos_h, sin_h, mid, c.l):
            lo = mid
        else:
            hi = mid
    clamped = HclColor(c.h, lo, c.l)
    distance = delta_e(hcl_to_lab(c), hcl_to_lab(clamped))
    return GamutCheck(False, clamped, distance)


def delta_e(a: LabColor, b: LabColor) -> float:
    """Euclidean distance in Lab (delta E*ab)."""
    return math.sqrt((a.l - b.l) ** 2 + (a.a - b.a) ** 2 + (a.b - b.b) ** 2)


def to_hex(c: SrgbColor) -> str:
    """Serialize as lowercase "#rrggbb"; channels rounded half-up to 8 bit."""
    r = int(c.r * 255.0 + 0.5)
    g = int(c.g * 255.0 + 0.5)
    b = int(c.b * 255.0 + 0.5)
    return f"#{r:02x}{g:02x}{b:02x}"


def from_hex(text: str) -> SrgbColor:
    if len(text) != 7 or not text.startswith("#"):
        raise ValueError(f"expected '#rrggbb', got {text!r}")
    return SrgbColor(
        int(text[1:3], 16) / 255.0,
        int(text[3:5], 16) / 255.0,
        int(text[5:7], 16) / 255.0,
    )


def hcl_to_hex(c: HclColor) -> str:
    # scalar fast path, arithmetic identical to lab_to_srgb(hcl_to_lab(c)) + to_hex
    rad = math.radians(c.h)
    fy = (c.l + 16.0) / 116.0
    fx = fy + (c.c * math.cos(rad)) / 500.0
    fz = fy - (c.c * math.sin(rad)) / 200.0
    x = _WX * (fx**3 if fx > _DELTA else _DELTA_SLOPE * (fx - _DELTA_OFFSET))
    y = _WY * (fy**3 if fy > _DELTA else _DELTA_SLOPE * (fy - _DELTA_OFFSET))
    z = _WZ * (fz**3 if fz > _DELTA else _DELTA_SLOPE * (fz - _DELTA_OFFSET))
    codes = []
    for v in (
        _M00 * x + _M01 * y + _M02 * z,
        _M10 * x + _M11 * y + _M12 * z,
        _M20 * x + _M21 * y + _M22 * z,
    ):
        v = _to_gamma(min(max(v, 0.0), 1.0))
        codes.append(int(min(max(v, 0.0), 1.0) * 255.0 + 0.5))
    return "#{:02x}{:02x}{:02x}".format(*codes)
