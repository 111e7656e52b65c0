import re
from dataclasses import dataclass
from enum import Enum

from triangle_moduli.config import get_tolerances
from triangle_moduli.exceptions import (
    InvalidPermutationError,
    MalformedLiteral,
    NotAcuteOrRightError,
    OnIsoscelesLocusError,
    OutsideTError,
)
from triangle_moduli.geometry import (
    TriangleClass,
    as_moduli_point,
    classify_point,
    format_complex,
    in_t,
    normalize_labeled,
    triangle_from_point,
)
from triangle_moduli.modular_group import UnimodularMatrix, act

_CYCLE_LITERAL = re.compile(r'e|(\([123]{2,3}\))+')

# side opposite each vertex of (0, 1, z), named by its endpoints
_SIDE_NAMES = {1: '|v3-v2|', 2: '|v3-v1|', 3: '|v2-v1|'}


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, 2, 3} given by its images (images[i-1] is the image of i)."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != [1, 2, 3]:
            raise InvalidPermutationError(f"{images!r} is not a permutation of (1, 2, 3)")
        object.__setattr__(self, 'images', images)

    def __call__(self, i):
        return self.images[i - 1]

    @property
    def parity(self):
        inversions = sum(
            1 for i in range(3) for j in range(i + 1, 3) if self.images[i] > self.images[j]
        )
        return inversions % 2

    @property
    def is_even(self):
        return self.parity == 0

    def compose(self, other):
        """
        Product matching the relabeling action: s3_apply(p.compose(q), z)
        equals s3_apply(p, s3_apply(q, z)). Relabelings move vertices by
        position, so the index maps compose as i -> other(self(i)).
        """
        return Permutation(tuple(other(self(i)) for i in (1, 2, 3)))

    def inverse(self):
        images = [0, 0, 0]
        for i in (1, 2, 3):
            images[self(i) - 1] = i
        return Permutation(tuple(images))

    def cycle_notation(self):
        cycles = []
        seen = set()
        for start in (1, 2, 3):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            cycles.append('(' + ''.join(str(i) for i in cycle) + ')')
        return ''.join(cycles) or 'e'

    def __str__(self):
        return self.cycle_notation()


def parse_permutation(text):
    """Parse cycle notation such as "e", "(12)" or "(132)"."""
    if not isinstance(text, str) or not _CYCLE_LITERAL.fullmatch(text.strip()):
        raise MalformedLiteral(text, 'cycle notation such as "e", "(12)" or "(123)"')
    images = {1: 1, 2: 2, 3: 3}
    for cycle in reversed(re.findall(r'\(([123]+)\)', text)):
        digits = [int(ch) for ch in cycle]
        if len(set(digits)) != len(digits):
            raise MalformedLiteral(text, 'cycles without repeated entries')
        step = {digits[k]: digits[(k + 1) % len(digits)] for k in range(len(digits))}
        images = {i: step.get(images[i], images[i]) for i in images}
    return Permutation((images[1], images[2], images[3]))


IDENTITY_PERMUTATION = Permutation((1, 2, 3))
CYCLE_123 = Permutation((2, 3, 1))
CYCLE_132 = Permutation((3, 1, 2))
SWAP_12 = Permutation((2, 1, 3))
SWAP_23 = Permutation((1, 3, 2))
SWAP_13 = Permutation((3, 2, 1))
ALL_PERMUTATIONS = (IDENTITY_PERMUTATION, CYCLE_123, CYCLE_132, SWAP_12, SWAP_23, SWAP_13)

# even permutations act by Mobius maps, odd ones by conjugate-Mobius maps
_RELABELING_MATRICES = {
    IDENTITY_PERMUTATION: UnimodularMatrix(1, 0, 0, 1),
    CYCLE_123: UnimodularMatrix(0, 1, -1, 1),     # 1/(1-z)
    CYCLE_132: UnimodularMatrix(1, -1, 1, 0),     # (z-1)/z
    SWAP_12: UnimodularMatrix(-1, 1, 0, 1),       # 1 - conj(z)
    SWAP_23: UnimodularMatrix(0, 1, 1, 0),        # conj(1/z)
    SWAP_13: UnimodularMatrix(1, 0, 1, -1),       # conj(z/(z-1))
}


def s3_matrix(sigma):
    """The GL(2,Z) element realising the relabeling sigma on H."""
    return _RELABELING_MATRICES[sigma]


def s3_apply(sigma, z):
    return act(s3_matrix(sigma), z)


def s3_apply_by_relabeling(sigma, z):
    """Permute the vertices of (0, 1, z) and normalize again."""
    point, _ = normalize_labeled(triangle_from_point(as_moduli_point(z)).permuted(sigma.images))
    return point


def _dedupe(points, tol):
    distinct = []
    for p in points:
        if all(abs(p - q) >= tol for q in distinct):
            distinct.append(p)
    return distinct


def s3_orbit(z):
    z = as_moduli_point(z)
    return _dedupe([s3_apply(sigma, z) for sigma in ALL_PERMUTATIONS], get_tolerances().orbit)


def stabilizer(z):
    z = as_moduli_point(z)
    tol = get_tolerances().orbit
    return [sigma for sigma in ALL_PERMUTATIONS if abs(s3_apply(sigma, z) - z) < tol]


class RegionColor(Enum):
    YELLOW = 'Yellow'
    PURPLE = 'Purple'


@dataclass(frozen=True)
class RegionId:
    """
    One of the six regions of T: the vertices listed by decreasing opposite
    side, with the parity of that listing as its color.
    """

    ordering: Permutation
    color: RegionColor

    def describe(self):
        return ' > '.join(_SIDE_NAMES[vertex] for vertex in self.ordering.images)


def region_of(z):
    """
    Locate a point of T among the six regions cut out by the isosceles loci.

    Raises:
        OutsideTError: z is not strictly inside T
        OnIsoscelesLocusError: z is within the locus tolerance of re = 1/2,
            |z| = 1 or |z - 1| = 1
    """
    z = as_moduli_point(z)
    if not in_t(z):
        raise OutsideTError(f"Point {format_complex(z)} is not in T")
    tol = get_tolerances().locus
    if abs(z.real - 0.5) <= tol or abs(abs(z) - 1) <= tol or abs(abs(z - 1) - 1) <= tol:
        raise OnIsoscelesLocusError(f"Point {format_complex(z)} lies on an isosceles locus")
    opposite = {1: abs(z - 1), 2: abs(z), 3: 1.0}
    ordering = Permutation(tuple(sorted(opposite, key=opposite.get, reverse=True)))
    color = RegionColor.YELLOW if ordering.is_even else RegionColor.PURPLE
    return RegionId(ordering, color)


def _canonical_violation(w):
    # zero exactly when |v2-v1| >= |v3-v1| >= |v3-v2|
    return max(0.0, abs(w) - 1, abs(w - 1) - abs(w))


def canonical_acute(z):
    """The orbit element with |z| <= 1, |z - 1| <= 1 and re(z) >= 1/2."""
    z = as_moduli_point(z)
    if classify_point(z) is TriangleClass.OBTUSE:
        raise NotAcuteOrRightError(f"Point {format_complex(z)} is an obtuse triangle")
    return min((s3_apply(sigma, z) for sigma in ALL_PERMUTATIONS), key=_canonical_violation)


def unlabeled_class(tri):
    """Canonical point of an acute or right triangle with its labels forgotten."""
    point, _ = normalize_labeled(tri)
    return canonical_acute(point)
