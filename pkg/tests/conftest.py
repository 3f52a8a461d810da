"""Shared fixtures: seeded randomness and random partially ordered DFAs."""

import random

import pytest

from greenbench import Transformation, dfa_from_transformations, relabel_states


def make_random_partially_ordered_dfa(rng, max_states=6, max_letters=4):
    """Complete DFA whose reachability relation is a partial order.

    Letters never move a state downward in a hidden linear order; a random
    relabelling then hides that order.
    """
    n = rng.randint(2, max_states)
    k = rng.randint(1, max_letters)
    named = []
    for i in range(k):
        images = [rng.randint(p, n) for p in range(1, n + 1)]
        named.append((f"s{i}", Transformation(images)))
    finals = [q for q in range(1, n + 1) if rng.random() < 0.4]
    d = dfa_from_transformations(named, rng.randint(1, n), finals)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return relabel_states(d, order)


def words_up_to(alphabet, max_len):
    """All words over alphabet of length <= max_len, shortest first."""
    layer = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (a,) for w in layer for a in alphabet]


@pytest.fixture
def rng():
    return random.Random(20250818)


@pytest.fixture
def random_pod_dfa(rng):
    def build(max_states=6, max_letters=4):
        return make_random_partially_ordered_dfa(rng, max_states, max_letters)

    return build
