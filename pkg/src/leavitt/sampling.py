"""Seeded pseudorandom elements for verification suites.

Everything takes an explicit random.Random so runs are reproducible from a
recorded seed.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Element, enumerate_monomials
from .grading import enumerate_Xg
from .rings import IntegerModRing, RationalRing


def random_scalar(ring, rng):
    """A small nonzero scalar of the ring."""
    if isinstance(ring, IntegerModRing):
        return rng.randrange(1, ring.modulus)
    value = rng.choice([-3, -2, -1, 1, 2, 3])
    if isinstance(ring, RationalRing) and rng.random() < 0.5:
        return Fraction(value, rng.choice([2, 3]))
    return value


def random_element(graph, ring, rng, max_support=4, len_bound=3):
    """A random element with bounded support; may be zero."""
    monos = enumerate_monomials(graph, len_bound)
    if not monos:
        return Element.zero(graph, ring)
    k = rng.randint(0, min(max_support, len(monos)))
    picks = rng.sample(list(monos), k)
    return Element.from_terms(
        graph, ring, [(m, random_scalar(ring, rng)) for m in picks]
    )


def realized_degrees(degree_map, len_bound):
    """Degrees with at least one monomial within the bound, sorted."""
    degs = {degree_map.degree_of(m) for m in enumerate_monomials(degree_map.graph, len_bound)}
    return sorted(degs, key=degree_map.group.sort_key)


def random_homogeneous(degree_map, ring, rng, degree=None, max_support=4, len_bound=3):
    """A random nonzero homogeneous element; picks a realized degree if none
    is given. Distinct normal monomials with nonzero coefficients never
    cancel, so the result is always nonzero."""
    if degree is None:
        options = realized_degrees(degree_map, len_bound)
        degree = options[rng.randrange(len(options))]
    monos = enumerate_Xg(degree, degree_map, len_bound)
    if not monos:
        raise ValueError(
            f"no monomials of degree {degree_map.group.render(degree)} within bound {len_bound}"
        )
    k = rng.randint(1, min(max_support, len(monos)))
    picks = rng.sample(list(monos), k)
    return Element.from_terms(
        degree_map.graph, ring, [(m, random_scalar(ring, rng)) for m in picks]
    )
