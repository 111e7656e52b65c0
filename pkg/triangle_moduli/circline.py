"""Circles and lines in the plane, closed under the action of GL(2,Z)."""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from triangle_moduli.exceptions import DomainError, InvalidMatrixError
from triangle_moduli.geometry import require_finite

_ZERO_EPS = 1e-12


@dataclass(frozen=True)
class Circline:
    """
    The locus A|z|^2 + 2 re(conj(B) z) + C = 0.

    A = 0 gives a line, otherwise a circle with centre -B/A and radius
    sqrt(|B|^2 - AC)/|A|. Internally this is the Hermitian matrix
    [[A, B], [conj(B), C]].
    """

    A: float
    B: complex
    C: float

    def __post_init__(self):
        object.__setattr__(self, 'A', float(self.A))
        object.__setattr__(self, 'B', require_finite(self.B, 'B'))
        object.__setattr__(self, 'C', float(self.C))
        if not (math.isfinite(self.A) and math.isfinite(self.C)):
            raise DomainError(f"Circline coefficients must be finite: {self}")
        if self.discriminant <= 0:
            raise DomainError(f"Circline {self} has an empty or one-point locus")

    @classmethod
    def line(cls, point, direction):
        """The line through point with the given (nonzero) direction."""
        normal = 1j * complex(direction)
        return cls(0.0, normal, -2 * (normal.conjugate() * complex(point)).real)

    @classmethod
    def vertical(cls, x):
        return cls(0.0, 1 + 0j, -2 * x)

    @classmethod
    def circle(cls, center, radius):
        center = complex(center)
        return cls(1.0, -center, abs(center) ** 2 - radius ** 2)

    @classmethod
    def from_hermitian(cls, matrix):
        return cls(matrix[0, 0].real, complex(matrix[0, 1]), matrix[1, 1].real)

    def hermitian(self):
        return np.array([[self.A, self.B], [self.B.conjugate(), self.C]], dtype=complex)

    @property
    def discriminant(self):
        return abs(self.B) ** 2 - self.A * self.C

    @property
    def is_line(self):
        return abs(self.A) <= _ZERO_EPS * max(abs(self.A), abs(self.B), abs(self.C))

    @property
    def center(self):
        return -self.B / self.A

    @property
    def radius(self):
        return math.sqrt(self.discriminant) / abs(self.A)

    def evaluate(self, z):
        return self.A * abs(z) ** 2 + 2 * (self.B.conjugate() * z).real + self.C

    def distance(self, z):
        """Euclidean distance from z to the locus."""
        if self.is_line:
            return abs(2 * (self.B.conjugate() * z).real + self.C) / (2 * abs(self.B))
        return abs(abs(z - self.center) - self.radius)

    def contains(self, z, tol=1e-9):
        return self.distance(z) <= tol

    def sample_points(self, count, spread=1.0):
        """Evenly spaced points on a circle, or points spaced by spread along a line."""
        if self.is_line:
            base = -self.C * self.B / (2 * abs(self.B) ** 2)
            direction = 1j * self.B / abs(self.B)
            return [base + (k - (count - 1) / 2) * spread * direction for k in range(count)]
        center, radius = self.center, self.radius
        return [center + radius * cmath.exp(2j * math.pi * k / count) for k in range(count)]

    def normalized(self):
        """Scale so the largest coefficient is 1 and the first nonzero of (A, re B, im B, C) is positive."""
        scale = max(abs(self.A), abs(self.B.real), abs(self.B.imag), abs(self.C))
        A, B, C = self.A / scale, self.B / scale, self.C / scale
        for value in (A, B.real, B.imag, C):
            if abs(value) > _ZERO_EPS:
                if value < 0:
                    A, B, C = -A, -B, -C
                break
        return Circline(A, B, C)

    def is_close(self, other, tol=1e-9):
        """Same locus up to a nonzero real factor, compared after normalization."""
        first, second = self.normalized(), other.normalized()
        for sign in (1, -1):
            if (
                abs(first.A - sign * second.A) <= tol
                and abs(first.B - sign * second.B) <= tol
                and abs(first.C - sign * second.C) <= tol
            ):
                return True
        return False


def circline_image(g, circline):
    """
    Image of a circline under the action of g on the plane.

    For z = g^-1 w the locus becomes (g^-1)^T H g^-1; a determinant -1 element
    first conjugates, which transposes H.
    """
    if g.det not in (1, -1):
        raise InvalidMatrixError(f"Determinant {g.det} is not +1 or -1")
    inverse = g.inverse()
    m = np.array([[inverse.a, inverse.b], [inverse.c, inverse.d]], dtype=float)
    hermitian = circline.hermitian()
    if g.det == -1:
        hermitian = hermitian.T
    return Circline.from_hermitian(m.T @ hermitian @ m)
