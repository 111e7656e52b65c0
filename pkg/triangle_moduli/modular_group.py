import logging
import math
import re
from dataclasses import dataclass
from operator import index
from typing import NamedTuple

from triangle_moduli.config import get_tolerances
from triangle_moduli.exceptions import (
    IntegerOverflowError,
    InvalidMatrixError,
    MalformedLiteral,
    NonTerminationError,
)
from triangle_moduli.geometry import ModuliPoint, as_moduli_point, format_complex

INT64_MAX = 2 ** 63 - 1

_MATRIX_LITERAL = re.compile(r'\[\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\s*,\s*\[\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\]\]')
_WORD_LITERAL = re.compile(r'[STtR]+|I')


@dataclass(frozen=True)
class UnimodularMatrix:
    """An element of GL(2,Z), entries row-major, held to the signed 64-bit range."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ('a', 'b', 'c', 'd'):
            value = getattr(self, name)
            if isinstance(value, bool):
                raise InvalidMatrixError(f"Matrix entry {name} must be an integer, got {value!r}")
            try:
                value = index(value)
            except TypeError:
                raise InvalidMatrixError(f"Matrix entry {name} must be an integer, got {value!r}")
            if abs(value) > INT64_MAX:
                raise IntegerOverflowError(f"Matrix entry {name} = {value} exceeds the 64-bit range")
            object.__setattr__(self, name, value)
        if self.det not in (1, -1):
            raise InvalidMatrixError(f"Determinant of {format_matrix(self)} is {self.det}, expected +1 or -1")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def is_special(self):
        return self.det == 1

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def compose(self, other):
        """Matrix product self * other; acting by it applies other first."""
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def inverse(self):
        det = self.det
        return UnimodularMatrix(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def __neg__(self):
        return UnimodularMatrix(-self.a, -self.b, -self.c, -self.d)

    def projective_key(self):
        """Entries of whichever of +g, -g has its first nonzero entry positive."""
        for value in self.entries:
            if value:
                sign = 1 if value > 0 else -1
                return tuple(sign * v for v in self.entries)
        raise InvalidMatrixError('Zero matrix has no projective class')

    @classmethod
    def from_word(cls, word):
        """Product of generators read left to right; 't' stands for T^-1."""
        result = IDENTITY
        for letter in word:
            try:
                result = result @ GENERATORS[letter]
            except KeyError:
                raise MalformedLiteral(word, 'a word over S, T, t, R')
        return result

    def __str__(self):
        return format_matrix(self)


def translation(n):
    return UnimodularMatrix(1, n, 0, 1)


IDENTITY = UnimodularMatrix(1, 0, 0, 1)
S = UnimodularMatrix(0, -1, 1, 0)
T = translation(1)
T_INV = translation(-1)
R = UnimodularMatrix(-1, 0, 0, 1)
GENERATORS = {'S': S, 'T': T, 't': T_INV, 'R': R}


def compose(g, h):
    return g.compose(h)


def inverse(g):
    return g.inverse()


def format_matrix(g):
    return f"[[{g.a},{g.b}],[{g.c},{g.d}]]"


def is_matrix_literal(text):
    """Syntax check only; the determinant is checked when the matrix is built."""
    if not isinstance(text, str):
        return False
    text = text.strip()
    return bool(_MATRIX_LITERAL.fullmatch(text) or _WORD_LITERAL.fullmatch(text))


def parse_matrix(text):
    """Parse "[[a,b],[c,d]]" or a generator word such as "STt" or "I"."""
    if not isinstance(text, str):
        raise MalformedLiteral(text, 'a matrix literal "[[a,b],[c,d]]" or a word over S, T, t, R')
    text = text.strip()
    match = _MATRIX_LITERAL.fullmatch(text)
    if match:
        return UnimodularMatrix(*(int(group) for group in match.groups()))
    if _WORD_LITERAL.fullmatch(text):
        return IDENTITY if text == 'I' else UnimodularMatrix.from_word(text)
    raise MalformedLiteral(text, 'a matrix literal "[[a,b],[c,d]]" or a word over S, T, t, R')


def act(g, z):
    """Apply g to a point of H; determinant -1 elements act through the conjugate."""
    z = as_moduli_point(z)
    w = z if g.det == 1 else z.conjugate()
    return ModuliPoint((g.a * w + g.b) / (g.c * w + g.d))


class ReductionResult(NamedTuple):
    point: ModuliPoint
    witness: UnimodularMatrix


def reduce_sl2z(z):
    """
    Reduce a point of H to the canonical SL(2,Z) fundamental domain.

    The result satisfies |z| >= 1 and -1/2 <= re(z) < 1/2; points on the
    right-hand half of the unit arc are moved to the left half and the line
    re(z) = 1/2 is identified with re(z) = -1/2.

    Args:
        z (ModuliPoint): Point of the upper half-plane

    Returns:
        ReductionResult: Reduced point and the det +1 witness g with g.z = point
    """
    z = as_moduli_point(z)
    tol = get_tolerances()
    w = complex(z)
    witness = IDENTITY
    for _ in range(tol.max_reduction_steps):
        shift = math.floor(w.real + 0.5)
        if shift:
            w -= shift
            witness = translation(-shift) @ witness
        if w.real * w.real + w.imag * w.imag < 1 - tol.reduction_margin:
            w = -1 / w
            witness = S @ witness
            continue
        break
    else:
        logging.error(f"Reduction of {format_complex(z)} did not settle after {tol.max_reduction_steps} steps")
        raise NonTerminationError(f"Reduction of {format_complex(z)} did not terminate")

    if w.real * w.real + w.imag * w.imag < 1 + tol.reduction_margin and w.real > tol.equality:
        w = -1 / w
        witness = S @ witness
    if abs(w.real - 0.5) <= tol.equality:
        w -= 1
        witness = T_INV @ witness
    return ReductionResult(ModuliPoint(w), witness)


def canonicalize_gl2z(z):
    """Reduce for SL(2,Z), then fold the left half of the domain onto the right with z -> -conj(z)."""
    result = reduce_sl2z(z)
    if result.point.real < 0:
        return ReductionResult(act(R, result.point), R @ result.witness)
    return result


def _boundary_images(p):
    # points the reduced domain identifies along its edges
    return (p, p + 1, p - 1, -1 / p)


def equivalent_sl2z(z1, z2):
    tol = get_tolerances().equality
    p1 = reduce_sl2z(z1).point
    p2 = reduce_sl2z(z2).point
    return any(abs(p1 - candidate) <= tol for candidate in _boundary_images(p2))


def equivalent_gl2z(z1, z2):
    """Same class up to GL(2,Z): equal up to SL(2,Z) or up to a mirror image."""
    return equivalent_sl2z(z1, z2) or equivalent_sl2z(z1, act(R, z2))
