import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from triangle_moduli.config import get_tolerances
from triangle_moduli.exceptions import (
    DegenerateInputError,
    MalformedLiteral,
    NonFiniteValueError,
    NotInUpperHalfPlaneError,
)

_NUMBER = r'(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?'
_COMPLEX_LITERAL = re.compile(rf'(?P<re>[+-]?{_NUMBER})(?P<im>[+-]{_NUMBER})i')


def require_finite(value, what='value'):
    """Reject NaN and infinite coordinates before they reach any computation."""
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteValueError(f"{what} must have finite coordinates, got {value!r}")
    return value


class ModuliPoint(complex):
    """A point of the upper half-plane H: the third vertex of a normalized triangle."""

    __slots__ = ()

    def __new__(cls, real=0.0, imag=None):
        value = complex(real) if imag is None else complex(real, imag)
        require_finite(value, 'moduli point')
        if not value.imag > 0:
            raise NotInUpperHalfPlaneError(f"Point {format_complex(value)} is not in the upper half-plane")
        return super().__new__(cls, value.real, value.imag)

    def __repr__(self):
        return f"ModuliPoint({format_complex(self)})"


def as_moduli_point(z):
    return z if isinstance(z, ModuliPoint) else ModuliPoint(z)


@dataclass(frozen=True)
class LabeledTriangle:
    """Three ordered vertices in the plane."""

    v1: complex
    v2: complex
    v3: complex

    def __post_init__(self):
        for name in ('v1', 'v2', 'v3'):
            object.__setattr__(self, name, require_finite(getattr(self, name), name))

    @property
    def vertices(self):
        return (self.v1, self.v2, self.v3)

    def transformed(self, fn):
        """Apply a plane map to every vertex, keeping the labels."""
        return LabeledTriangle(*(fn(v) for v in self.vertices))

    def conjugated(self):
        return self.transformed(lambda v: v.conjugate())

    def permuted(self, images):
        """Triangle whose i-th vertex is the images[i]-th vertex of this one (1-based)."""
        vertices = self.vertices
        return LabeledTriangle(*(vertices[k - 1] for k in images))


def triangle_from_point(z):
    """The normalized labeled triangle (0, 1, z)."""
    return LabeledTriangle(0j, 1 + 0j, complex(z))


class TriangleClass(Enum):
    ACUTE = 'Acute'
    RIGHT = 'Right'
    OBTUSE = 'Obtuse'
    DEGENERATE = 'Degenerate'


class AngleTriple(NamedTuple):
    """Interior angles in radians at v1, v2 and v3."""

    alpha: float
    beta: float
    gamma: float

    @property
    def largest(self):
        return max(self)


def _normalized_ratio(tri):
    eps = get_tolerances().degeneracy
    base = tri.v2 - tri.v1
    scale = max(abs(v) for v in tri.vertices)
    if base == 0 or abs(base) <= eps * scale:
        raise DegenerateInputError(f"First and second vertex coincide: {format_complex(tri.v1)}")
    w = (tri.v3 - tri.v1) / base
    if abs(w.imag) <= eps * (1 + abs(w)):
        raise DegenerateInputError(f"Vertices are collinear: {', '.join(format_complex(v) for v in tri.vertices)}")
    return w


def normalize_labeled(tri):
    """
    Map a labeled triangle to its point of the moduli space.

    The similarity sending v1 to 0 and v2 to 1 is applied to v3; when the image
    falls in the lower half-plane the triangle is reflected as well.

    Args:
        tri (LabeledTriangle): Non-degenerate labeled triangle

    Returns:
        tuple: (ModuliPoint, reflected) where reflected records whether an
        orientation-reversing similarity was needed
    """
    w = _normalized_ratio(tri)
    if w.imag > 0:
        return ModuliPoint(w), False
    return ModuliPoint(w.conjugate()), True


def classify_point(z):
    """Classify the triangle (0, 1, z) by where z sits relative to T and its closure."""
    z = as_moduli_point(z)
    tol = get_tolerances().classify
    x = z.real
    gap = abs(z - 0.5) - 0.5
    if abs(x) <= tol or abs(x - 1) <= tol or abs(gap) <= tol:
        return TriangleClass.RIGHT
    if tol < x < 1 - tol and gap > tol:
        return TriangleClass.ACUTE
    return TriangleClass.OBTUSE


def in_t(z):
    return classify_point(z) is TriangleClass.ACUTE


def in_closure_of_t(z):
    return classify_point(z) is not TriangleClass.OBTUSE


def classify_triangle(tri):
    try:
        z, _ = normalize_labeled(tri)
    except DegenerateInputError as e:
        logging.debug(f"Classified as degenerate: {e}")
        return TriangleClass.DEGENERATE
    return classify_point(z)


def angles_of(tri):
    """
    Interior angles from the squared side lengths and the area.

    Each angle is atan2(4K, s1 + s2 - s_opp) where K is the area and s are
    squared side lengths, the law of cosines in a form that stays accurate
    for angles near 0 and pi.
    """
    _normalized_ratio(tri)
    v1, v2, v3 = tri.vertices
    a2 = abs(v2 - v3) ** 2
    b2 = abs(v1 - v3) ** 2
    c2 = abs(v1 - v2) ** 2
    four_area = 2 * abs(((v2 - v1).conjugate() * (v3 - v1)).imag)
    return AngleTriple(
        math.atan2(four_area, b2 + c2 - a2),
        math.atan2(four_area, a2 + c2 - b2),
        math.atan2(four_area, a2 + b2 - c2),
    )


# ============================================================================
# COMPLEX LITERALS
# ============================================================================

def _format_real(x):
    if x == 0:
        return '0'
    text = repr(float(x))
    return text[:-2] if text.endswith('.0') else text


def format_complex(z):
    """Render z as "a+bi" / "a-bi" with the shortest digits that round-trip."""
    z = complex(z)
    sign = '-' if z.imag < 0 else '+'
    return f"{_format_real(z.real)}{sign}{_format_real(abs(z.imag))}i"


def is_complex_literal(text):
    return isinstance(text, str) and _COMPLEX_LITERAL.fullmatch(text.strip()) is not None


def parse_complex(text):
    match = _COMPLEX_LITERAL.fullmatch(text.strip()) if isinstance(text, str) else None
    if match is None:
        raise MalformedLiteral(text, 'a complex literal such as "0.5+0.8i" or "1-2i"')
    return complex(float(match.group('re')), float(match.group('im')))
