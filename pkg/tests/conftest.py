"""Shared fixtures: the three bundled curves parsed once per session."""

import random
from fractions import Fraction

import pytest

from g2desc import cli, fixtures
from g2desc.exact import UniPoly, discriminant, eval_hom
from g2desc.kummer import SexticCurve, Twist


@pytest.fixture(scope="session")
def fixture_sets():
    return {label: cli.load_fixture(label) for label in fixtures.LABELS}


@pytest.fixture(scope="session")
def curve_6982(fixture_sets):
    return fixture_sets["6982.a.13964.1"]


@pytest.fixture(scope="session")
def curve_6443(fixture_sets):
    return fixture_sets["6443.a.6443.1"]


@pytest.fixture(scope="session")
def curve_141991(fixture_sets):
    return fixture_sets["141991.b.141991.1"]


def random_curve(rng, height=5):
    """A random squarefree sextic with the rational root alpha, by drawing
    f = (x - alpha) * (quintic) until the discriminant is nonzero."""
    while True:
        alpha = Fraction(rng.randint(-height, height))
        g = [Fraction(rng.randint(-height, height)) for _ in range(5)]
        g.append(Fraction(rng.choice([c for c in range(-height, height + 1) if c])))
        f = UniPoly([-alpha, Fraction(1)]) * UniPoly(g)
        if discriminant(f) != 0:
            return SexticCurve(f, alpha)


def random_twist(rng, curve, height=5):
    """A random unit delta of L, by rejection."""
    while True:
        coeffs = [Fraction(rng.randint(-height, height)) for _ in range(6)]
        if all(c == 0 for c in coeffs):
            continue
        try:
            return Twist(curve, coeffs)
        except Exception:
            continue


def random_elem(rng, algebra, height=9):
    return algebra.elem([Fraction(rng.randint(-height, height))
                         for _ in range(algebra.n)])
