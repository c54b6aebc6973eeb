"""Seeded random SAFs for property checks."""

from __future__ import annotations

import random

from .framework import SAF


def random_saf(rng: random.Random, n_args: int, p_attack: float = 0.2, p_sub: float = 0.3) -> SAF:
    """Draw a valid SAF over ``a1..an``.

    Subargument edges only run forward along a random permutation, so the
    relation is acyclic.  Attacks that are not minimal (the attacker also
    hits a proper subargument of the target) are dropped.
    """
    names = [f"a{i}" for i in range(1, n_args + 1)]
    order = names[:]
    rng.shuffle(order)
    sub = {(order[i], order[j]) for i in range(n_args) for j in range(i + 1, n_args) if rng.random() < p_sub}
    att = {(x, y) for x in names for y in names if rng.random() < p_attack}
    draft = SAF(frozenset(names), frozenset(), frozenset(sub))
    subs = draft.closures.subs
    minimal = {(x, y) for x, y in att if not any(z != y and (x, z) in att for z in subs[y])}
    return SAF(frozenset(names), frozenset(minimal), frozenset(sub))


def random_corpus(seed: int, count: int, max_args: int, min_args: int = 1) -> list[SAF]:
    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n = rng.randint(min_args, max_args)
        p_attack = rng.uniform(0.05, 0.35)
        p_sub = rng.uniform(0.0, 0.5)
        corpus.append(random_saf(rng, n, p_attack, p_sub))
    return corpus
