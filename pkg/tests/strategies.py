"""Hypothesis strategies and seeded samplers shared by the test modules."""

import math

from hypothesis import assume
from hypothesis import strategies as st

from triangle_moduli.circline import Circline
from triangle_moduli.modular_group import UnimodularMatrix

MARGIN = 1e-3


def real(lo, hi):
    return st.floats(min_value=lo, max_value=hi, allow_nan=False, allow_infinity=False)


@st.composite
def upper_half_points(draw, im_lo=0.01, im_hi=10.0, re_bound=5.0):
    return complex(draw(real(-re_bound, re_bound)), draw(real(im_lo, im_hi)))


def distance_to_loci(z):
    """Distance-like gap from z to the boundary of T and to the three isosceles loci."""
    return min(
        z.real,
        1 - z.real,
        abs(z - 0.5) - 0.5,
        abs(z.real - 0.5),
        abs(abs(z) - 1),
        abs(abs(z - 1) - 1),
    )


def is_generic_in_t(z, margin=MARGIN):
    return distance_to_loci(z) > margin


@st.composite
def points_in_t(draw):
    x = draw(real(0.02, 0.98))
    floor = math.sqrt(0.25 - (x - 0.5) ** 2)
    return complex(x, draw(real(floor + 0.02, 3.0)))


@st.composite
def generic_points_in_t(draw):
    z = draw(points_in_t())
    assume(is_generic_in_t(z))
    return z


def words(alphabet='STtR', max_size=6):
    return st.text(alphabet=alphabet, max_size=max_size)


def matrices(alphabet='STtR', max_size=6):
    return words(alphabet, max_size).map(UnimodularMatrix.from_word)


@st.composite
def circlines(draw):
    if draw(st.booleans()):
        center = complex(draw(real(-3, 3)), draw(real(-3, 3)))
        return Circline.circle(center, draw(real(0.1, 3)))
    point = complex(draw(real(-3, 3)), draw(real(-3, 3)))
    angle = draw(real(0, math.pi))
    return Circline.line(point, complex(math.cos(angle), math.sin(angle)))


# ============================================================================
# SEEDED SAMPLERS FOR THE FIXED-COUNT TRIALS
# ============================================================================

def random_upper_half(rng, im_lo=0.01, im_hi=10.0, re_bound=5.0):
    return complex(rng.uniform(-re_bound, re_bound), rng.uniform(im_lo, im_hi))


def random_in_t(rng):
    x = rng.uniform(0.01, 0.99)
    floor = math.sqrt(0.25 - (x - 0.5) ** 2)
    return complex(x, rng.uniform(floor + 1e-3, 3.0))


def random_generic_in_t(rng, margin=MARGIN):
    while True:
        z = random_in_t(rng)
        if is_generic_in_t(z, margin):
            return z


def random_right_point(rng):
    """A point of the semicircle |z - 1/2| = 1/2: right angle at the third vertex."""
    theta = rng.uniform(0.05, math.pi - 0.05)
    return complex(0.5 + 0.5 * math.cos(theta), 0.5 * math.sin(theta))


def random_similarity(rng):
    """A direct similarity v -> a v + b with a bounded away from zero."""
    a = rng.uniform(0.2, 5) * complex(math.cos(rng.uniform(0, 2 * math.pi)), math.sin(rng.uniform(0, 2 * math.pi)))
    b = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
    return lambda v: a * v + b


def random_word(rng, alphabet='STt', max_size=12):
    return ''.join(rng.choice(alphabet) for _ in range(rng.randint(0, max_size)))


def close_mod_boundary(p, q, tol):
    """Reduced points agree, allowing for the edge identifications of the reduced domain."""
    return any(abs(p - candidate) <= tol for candidate in (q, q + 1, q - 1, -1 / q))
