import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from triangle_moduli.config import get_tolerances
from triangle_moduli.exceptions import (
    CollinearBasisError,
    DegenerateInputError,
    InvalidParallelogramError,
    NegativeOrientationError,
    NotInClosureOfTError,
    NotInTError,
    ObtuseInputError,
)
from triangle_moduli.geometry import (
    ModuliPoint,
    TriangleClass,
    as_moduli_point,
    classify_point,
    classify_triangle,
    format_complex,
    in_t,
    require_finite,
)
from triangle_moduli.modular_group import R, act, equivalent_sl2z, reduce_sl2z
from triangle_moduli.s3_action import CYCLE_123, CYCLE_132, s3_apply


class EdgeChoice(Enum):
    """Edge of the triangle, named by its endpoints, about whose midpoint it is rotated."""

    E12 = (1, 2)
    E13 = (1, 3)
    E23 = (2, 3)


@dataclass(frozen=True)
class Parallelogram:
    """Four vertices in cyclic order with q2 - q1 = q3 - q4."""

    q1: complex
    q2: complex
    q3: complex
    q4: complex

    def __post_init__(self):
        for name in ('q1', 'q2', 'q3', 'q4'):
            object.__setattr__(self, name, require_finite(getattr(self, name), name))
        scale = 1 + max(abs(q) for q in self.vertices)
        if abs((self.q2 - self.q1) - (self.q3 - self.q4)) > get_tolerances().equality * scale:
            raise InvalidParallelogramError(
                f"Opposite sides differ: {', '.join(format_complex(q) for q in self.vertices)}"
            )

    @property
    def vertices(self):
        return (self.q1, self.q2, self.q3, self.q4)


@dataclass(frozen=True)
class LatticeBasis:
    """Positively oriented basis (im(w2/w1) > 0) of a rank-2 lattice in the plane."""

    w1: complex
    w2: complex

    def __post_init__(self):
        w1 = require_finite(self.w1, 'w1')
        w2 = require_finite(self.w2, 'w2')
        object.__setattr__(self, 'w1', w1)
        object.__setattr__(self, 'w2', w2)
        if w1 == 0:
            raise CollinearBasisError('First basis vector is zero')
        ratio = w2 / w1
        if abs(ratio.imag) <= get_tolerances().degeneracy * (1 + abs(ratio)):
            raise CollinearBasisError(f"Basis vectors {format_complex(w1)}, {format_complex(w2)} are collinear")
        if ratio.imag < 0:
            raise NegativeOrientationError(
                f"Basis {format_complex(w1)}, {format_complex(w2)} is negatively oriented"
            )

    @classmethod
    def oriented(cls, w1, w2):
        """Build a basis of the lattice spanned by w1, w2, negating w2 if needed."""
        w1, w2 = complex(w1), complex(w2)
        if w1 != 0 and (w2 / w1).imag < 0:
            w2 = -w2
        return cls(w1, w2)


class DoubledTriangle(NamedTuple):
    parallelogram: Parallelogram
    basis: LatticeBasis
    edge: EdgeChoice


class CurveConstruction(NamedTuple):
    """Everything the doubling construction produces for one triangle."""

    modulus: ModuliPoint
    witness: object
    tau: ModuliPoint
    doubled: DoubledTriangle


def parallelogram_basis(parallelogram):
    """
    Edge vectors leaving the lexicographically smallest vertex (by re, then
    im), swapped when needed so the basis is positively oriented.
    """
    q = parallelogram.vertices
    k = min(range(4), key=lambda n: (q[n].real, q[n].imag))
    w1 = q[(k + 1) % 4] - q[k]
    w2 = q[(k - 1) % 4] - q[k]
    if (w2 / w1).imag < 0:
        w1, w2 = w2, w1
    return LatticeBasis(w1, w2)


def point_parallelogram(z):
    """The parallelogram 0, 1, z + 1, z whose edge identification gives the curve of z."""
    z = as_moduli_point(z)
    return Parallelogram(0j, 1 + 0j, z + 1, complex(z))


def double_across(tri, edge=EdgeChoice.E12, force=False):
    """
    Rotate a triangle 180 degrees about the midpoint of one edge and take the union.

    Args:
        tri (LabeledTriangle): Acute or right triangle
        edge (EdgeChoice): Edge whose midpoint is the centre of rotation
        force (bool): Accept obtuse triangles as well

    Returns:
        DoubledTriangle: Parallelogram (apex, m1, rotated apex, m2), its
        lattice basis and the edge used
    """
    kind = classify_triangle(tri)
    if kind is TriangleClass.DEGENERATE:
        raise DegenerateInputError('Cannot double a degenerate triangle')
    if kind is TriangleClass.OBTUSE and not force:
        raise ObtuseInputError('Doubling is defined for acute or right triangles; pass force to override')
    i, j = edge.value
    vertices = tri.vertices
    m1, m2 = vertices[i - 1], vertices[j - 1]
    apex = vertices[6 - i - j - 1]
    parallelogram = Parallelogram(apex, m1, m1 + m2 - apex, m2)
    return DoubledTriangle(parallelogram, parallelogram_basis(parallelogram), edge)


def _as_basis(basis):
    return basis if isinstance(basis, LatticeBasis) else LatticeBasis(*basis)


def lattice_tau(basis):
    """Ratio w2/w1 of a positively oriented basis; unchanged when both vectors are scaled together."""
    basis = _as_basis(basis)
    return ModuliPoint(basis.w2 / basis.w1)


def same_lattice(first, second):
    """Whether the two bases differ by an integer change of basis of determinant +1 or -1."""
    first, second = _as_basis(first), _as_basis(second)
    columns = np.array([[first.w1.real, first.w2.real], [first.w1.imag, first.w2.imag]])
    targets = np.array([[second.w1.real, second.w2.real], [second.w1.imag, second.w2.imag]])
    coefficients = np.linalg.solve(columns, targets)
    rounded = np.rint(coefficients)
    scale = 1 + np.abs(coefficients).max()
    if not np.allclose(coefficients, rounded, rtol=0, atol=get_tolerances().equality * scale):
        return False
    return abs(round(np.linalg.det(rounded))) == 1


def curves_isomorphic(first, second):
    """Lattices related by rotation and dilation give isomorphic elliptic curves."""
    return equivalent_sl2z(lattice_tau(first), lattice_tau(second))


def mirror_is_isomorphic(z):
    """Whether the mirror image of the parallelogram of z gives an isomorphic curve."""
    return equivalent_sl2z(z, act(R, z))


def p_map(z):
    """Send a point of the closure of T to its elliptic curve class, as a reduced point."""
    z = as_moduli_point(z)
    if classify_point(z) is TriangleClass.OBTUSE:
        raise NotInClosureOfTError(f"Point {format_complex(z)} is outside the closure of T")
    return reduce_sl2z(z).point


def p_section(w):
    """A point of the closure of T lying over the class of w."""
    reduced = reduce_sl2z(w).point
    if reduced.real >= 0:
        return reduced
    return ModuliPoint(reduced + 1)


def fiber_in_T(z):
    """Points of T with the same elliptic curve as z: its images under the two 3-cycles."""
    z = as_moduli_point(z)
    if not in_t(z):
        raise NotInTError(f"Point {format_complex(z)} is not in T")
    tol = get_tolerances().orbit
    fiber = []
    for candidate in (z, s3_apply(CYCLE_123, z), s3_apply(CYCLE_132, z)):
        if in_t(candidate) and all(abs(candidate - p) >= tol for p in fiber):
            fiber.append(candidate)
    return fiber


def construct_curve(tri, edge=EdgeChoice.E12, force=False):
    doubled = double_across(tri, edge, force=force)
    tau = lattice_tau(doubled.basis)
    modulus, witness = reduce_sl2z(tau)
    logging.debug(
        f"Edge {edge.name}: tau {format_complex(tau)} reduces to {format_complex(modulus)}"
    )
    return CurveConstruction(modulus, witness, tau, doubled)


def curve_of_triangle(tri, edge=EdgeChoice.E12, force=False):
    """Reduced modulus of the elliptic curve built by doubling an acute or right triangle."""
    return construct_curve(tri, edge, force=force).modulus
