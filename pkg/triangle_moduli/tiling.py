"""Tessellation of the upper half-plane by GL(2,Z) images of a half fundamental domain."""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from triangle_moduli.circline import Circline, circline_image
from triangle_moduli.exceptions import DomainError, InvalidViewportError
from triangle_moduli.modular_group import IDENTITY, R, S, T, T_INV, UnimodularMatrix, act

RHO = complex(0.5, math.sqrt(3) / 2)
DEFAULT_Y_MAX = 2.2
BFS_GENERATORS = (S, T, T_INV, R)


@dataclass(frozen=True)
class Viewport:
    """Plane rectangle shown in the figure and the pixel grid it maps to."""

    x_min: float = -1.1
    x_max: float = 1.1
    y_min: float = 0.05
    y_max: float = DEFAULT_Y_MAX
    width_px: int = 880
    height_px: int = 860
    precision: int = 6

    def __post_init__(self):
        values = (self.x_min, self.x_max, self.y_min, self.y_max)
        if not all(math.isfinite(v) for v in values):
            raise InvalidViewportError(f"Viewport bounds must be finite: {values}")
        if not self.x_min < self.x_max:
            raise InvalidViewportError(f"x_min {self.x_min} must be below x_max {self.x_max}")
        if not 0 < self.y_min < self.y_max:
            raise InvalidViewportError(f"Need 0 < y_min < y_max, got {self.y_min}, {self.y_max}")
        if self.width_px <= 0 or self.height_px <= 0:
            raise InvalidViewportError(f"Pixel size must be positive, got {self.width_px}x{self.height_px}")
        if not 0 <= self.precision <= 12:
            raise InvalidViewportError(f"Precision must be between 0 and 12, got {self.precision}")

    @property
    def scale_x(self):
        return self.width_px / (self.x_max - self.x_min)

    @property
    def scale_y(self):
        return self.height_px / (self.y_max - self.y_min)

    def to_pixel(self, z):
        return (z.real - self.x_min) * self.scale_x, (self.y_max - z.imag) * self.scale_y

    def overlaps(self, bounds):
        x_lo, x_hi, y_lo, y_hi = bounds
        return x_hi >= self.x_min and x_lo <= self.x_max and y_hi >= self.y_min and y_lo <= self.y_max


@dataclass(frozen=True)
class GeodesicArc:
    """Piece of a circline from start to end; None stands for the point at infinity."""

    circline: Circline
    start: Optional[complex]
    end: Optional[complex]

    def image(self, g):
        return GeodesicArc(circline_image(g, self.circline), _vertex_image(g, self.start), _vertex_image(g, self.end))

    def bounds(self, y_cap):
        """Bounding box (x_lo, x_hi, y_lo, y_hi) with infinite ends cut at y_cap."""
        finite = [p for p in (self.start, self.end) if p is not None]
        points = list(finite)
        if len(finite) < 2:
            points.append(complex(finite[0].real, max(y_cap, finite[0].imag)))
        elif not self.circline.is_line:
            center = self.circline.center.real
            lo, hi = sorted(p.real for p in finite)
            if lo <= center <= hi:
                points.append(complex(center, self.circline.radius))
        xs = [p.real for p in points]
        ys = [p.imag for p in points]
        return min(xs), max(xs), min(ys), max(ys)


def _vertex_image(g, vertex):
    if vertex is None:
        return None if g.c == 0 else complex(g.a / g.c, 0.0)
    return complex(act(g, vertex))


class Shade(Enum):
    LIGHT = 'light'
    DARK = 'dark'


@dataclass(frozen=True)
class Tile:
    element: UnimodularMatrix
    depth: int
    boundary: tuple
    shade: Shade

    def bounds(self, y_cap):
        boxes = [arc.bounds(y_cap) for arc in self.boundary]
        return (
            min(b[0] for b in boxes),
            max(b[1] for b in boxes),
            min(b[2] for b in boxes),
            max(b[3] for b in boxes),
        )


# the GL(2,Z) half-domain {0 <= re z <= 1/2, |z| >= 1}, traversed from the cusp
BASE_BOUNDARY = (
    GeodesicArc(Circline.vertical(0.0), None, 1j),
    GeodesicArc(Circline.circle(0j, 1.0), 1j, RHO),
    GeodesicArc(Circline.vertical(0.5), RHO, None),
)


def make_tile(g, depth):
    boundary = tuple(arc.image(g) for arc in BASE_BOUNDARY)
    shade = Shade.LIGHT if g.det == 1 else Shade.DARK
    return Tile(g, depth, boundary, shade)


def enumerate_elements(depth):
    """
    Breadth-first search over words in S, T, T^-1 and R.

    Returns:
        list: (element, word length) pairs, one per element up to sign, with
        the element stored as its sign-canonical representative
    """
    if depth < 0:
        raise DomainError(f"Depth must be non-negative, got {depth}")
    seen = {IDENTITY.projective_key()}
    frontier = [IDENTITY]
    elements = [(IDENTITY, 0)]
    for level in range(1, depth + 1):
        next_frontier = []
        for g in frontier:
            for generator in BFS_GENERATORS:
                h = g @ generator
                key = h.projective_key()
                if key in seen:
                    continue
                seen.add(key)
                next_frontier.append(h)
                elements.append((UnimodularMatrix(*key), level))
        frontier = next_frontier
        logging.debug(f"Depth {level}: {len(next_frontier)} new elements, {len(elements)} total")
    return elements


def enumerate_tiles(depth, vp=None):
    """
    Tiles g(D) for every element g of word length <= depth.

    The result grows exponentially with depth. When a viewport is given only
    tiles whose boundary's bounding box meets it are kept.

    Args:
        depth (int): Maximum word length
        vp (Viewport): Optional viewport filter

    Returns:
        list: Tiles sorted by (depth, a, b, c, d)
    """
    tiles = [make_tile(g, level) for g, level in enumerate_elements(depth)]
    if vp is not None:
        y_cap = vp.y_max
        tiles = [tile for tile in tiles if vp.overlaps(tile.bounds(y_cap))]
    tiles.sort(key=lambda tile: (tile.depth, *tile.element.entries))
    logging.debug(f"Enumerated {len(tiles)} tiles up to depth {depth}")
    return tiles


# ============================================================================
# THE SIX REGIONS OF T
# ============================================================================

_RE_0 = Circline.vertical(0.0)
_RE_HALF = Circline.vertical(0.5)
_RE_1 = Circline.vertical(1.0)
_UNIT = Circline.circle(0j, 1.0)
_UNIT_AT_1 = Circline.circle(1 + 0j, 1.0)
_RIGHT_ANGLE = Circline.circle(0.5 + 0j, 0.5)
_MID = complex(0.5, 0.5)


@dataclass(frozen=True)
class TRegion:
    sample: complex
    boundary: tuple


def t_region_arcs():
    """Boundaries of the six regions of T, each with a point inside it."""
    return (
        TRegion(complex(0.25, 1.5), (
            GeodesicArc(_RE_0, None, 1j),
            GeodesicArc(_UNIT, 1j, RHO),
            GeodesicArc(_RE_HALF, RHO, None),
        )),
        TRegion(complex(0.75, 1.5), (
            GeodesicArc(_RE_HALF, None, RHO),
            GeodesicArc(_UNIT_AT_1, RHO, 1 + 1j),
            GeodesicArc(_RE_1, 1 + 1j, None),
        )),
        TRegion(complex(0.1, 0.8), (
            GeodesicArc(_RE_0, 0j, 1j),
            GeodesicArc(_UNIT, 1j, RHO),
            GeodesicArc(_UNIT_AT_1, RHO, 0j),
        )),
        TRegion(complex(0.4, 0.6), (
            GeodesicArc(_UNIT_AT_1, 0j, RHO),
            GeodesicArc(_RE_HALF, RHO, _MID),
            GeodesicArc(_RIGHT_ANGLE, _MID, 0j),
        )),
        TRegion(complex(0.6, 0.6), (
            GeodesicArc(_RE_HALF, RHO, _MID),
            GeodesicArc(_RIGHT_ANGLE, _MID, 1 + 0j),
            GeodesicArc(_UNIT, 1 + 0j, RHO),
        )),
        TRegion(complex(0.9, 0.8), (
            GeodesicArc(_UNIT, RHO, 1 + 0j),
            GeodesicArc(_RE_1, 1 + 0j, 1 + 1j),
            GeodesicArc(_UNIT_AT_1, 1 + 1j, RHO),
        )),
    )
