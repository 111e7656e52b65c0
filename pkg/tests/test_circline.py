import random

import pytest
from hypothesis import assume, given

from tests.strategies import circlines, matrices, random_word
from triangle_moduli.circline import Circline, circline_image
from triangle_moduli.exceptions import DomainError
from triangle_moduli.modular_group import IDENTITY, S, UnimodularMatrix, act


def on_circline(circline, w, tol=1e-9):
    normalized = circline.normalized()
    return abs(normalized.evaluate(w)) <= tol * (1 + abs(w) ** 2)


class TestCircline:
    @pytest.mark.parametrize('coefficients', [(1, 0, 1), (0, 0, 0), (1, 1, 1)])
    def test_rejects_empty_or_point_locus(self, coefficients):
        with pytest.raises(DomainError):
            Circline(*coefficients)

    def test_circle(self):
        circle = Circline.circle(2 + 1j, 3)
        assert not circle.is_line
        assert circle.center == pytest.approx(2 + 1j)
        assert circle.radius == pytest.approx(3)
        assert circle.contains(5 + 1j)
        assert circle.distance(2 + 1j) == pytest.approx(3)

    def test_horizontal_line(self):
        line = Circline.line(1j, 1)
        assert line.is_line
        assert line.contains(5 + 1j)
        assert line.contains(-3 + 1j)
        assert not line.contains(2j)
        assert line.distance(3j) == pytest.approx(2)

    def test_vertical_line(self):
        line = Circline.vertical(0.5)
        assert line.contains(0.5 + 7j)
        assert line.is_close(Circline.line(0.5, 1j))

    def test_normalized(self):
        normalized = Circline(-2, 0, 2).normalized()
        assert (normalized.A, normalized.B, normalized.C) == (1, 0, -1)

    @given(circlines())
    def test_sample_points_lie_on_circline(self, circline):
        for w in circline.sample_points(10):
            assert on_circline(circline, w)


class TestCirclineImage:
    def test_identity(self):
        circle = Circline.circle(0.3 + 0.2j, 1.5)
        assert circline_image(IDENTITY, circle).is_close(circle)

    def test_inversion_preserves_unit_circle(self):
        unit = Circline.circle(0, 1)
        assert circline_image(S, unit).is_close(unit)

    def test_inversion_of_half_line(self):
        assert circline_image(S, Circline.vertical(0.5)).is_close(Circline.circle(-1, 1))

    def test_reflection(self):
        image = circline_image(UnimodularMatrix(-1, 0, 0, 1), Circline.vertical(0.25))
        assert image.is_close(Circline.vertical(-0.25))

    @given(matrices(), circlines())
    def test_round_trip(self, g, circline):
        back = circline_image(g.inverse(), circline_image(g, circline))
        assert back.is_close(circline)

    @given(matrices(), circlines())
    def test_points_map_onto_image(self, g, circline):
        image = circline_image(g, circline)
        points = [w for w in circline.sample_points(10) if w.imag > 0.05]
        assume(points)
        for w in points:
            assert on_circline(image, act(g, w))

    def test_seeded_trials(self):
        rng = random.Random(43)
        for _ in range(1_000):
            g = UnimodularMatrix.from_word(random_word(rng, 'STtR', 6))
            circline = Circline.circle(complex(rng.uniform(-2, 2), rng.uniform(0.2, 2)), rng.uniform(0.1, 2))
            image = circline_image(g, circline)
            assert circline_image(g.inverse(), image).is_close(circline)
            for w in circline.sample_points(10):
                if w.imag > 0.05:
                    assert on_circline(image, act(g, w))
