"""Forgetful projection to Dung frameworks and what it does and does not keep.

``forget`` lifts every direct attack on ``b2`` to every superargument of
``b2`` and drops the subargument relation.  Extensions survive the
projection (``check_preservation``); structure does not: distinct SAFs can
share a projection (``find_collision``) and superargument reach is not
visible as attack reach (``reach_divergence``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

from .errors import NotFound, UnknownArgument, ValidationError
from .framework import SAF, ArgumentId, DungAF
from .semantics import (
    ALL_SEMANTICS,
    ExtensionSet,
    MaskedFramework,
    Semantics,
    extensions,
)


def forget(saf: SAF) -> DungAF:
    subs = saf.closures.subs
    lifted = {(a, b) for b in saf.arguments for a, b2 in saf.attacks if b2 in subs[b]}
    return DungAF(saf.arguments, frozenset(lifted))


def masked_dung(af: DungAF) -> MaskedFramework:
    names = sorted(af.arguments)
    idx = {a: i for i, a in enumerate(names)}
    attackers = [0] * len(names)
    attacked = [0] * len(names)
    for a, b in af.attacks:
        attackers[idx[b]] |= 1 << idx[a]
        attacked[idx[a]] |= 1 << idx[b]
    threats = []
    for i in range(len(names)):
        threats.append([attackers[j] for j in range(len(names)) if attackers[i] >> j & 1])
    conflicts = [attackers[i] | attacked[i] for i in range(len(names))]
    return MaskedFramework(names, threats, conflicts, attackers)


@lru_cache(maxsize=256)
def _masked_dung(af: DungAF) -> MaskedFramework:
    return masked_dung(af)


def dung_extensions(af: DungAF, semantics, bound: int | None = None) -> ExtensionSet:
    """Standard Dung semantics; grounded is the least fixpoint of the characteristic function."""
    semantics = Semantics.parse(semantics)
    mf = _masked_dung(af)
    found = mf.solve(semantics, bound)
    return ExtensionSet.create(semantics, [mf.to_set(m) for m in found], af.digest)


def reach_attack(af: DungAF, x: ArgumentId) -> frozenset[ArgumentId]:
    """Arguments reachable from ``x`` by a directed attack path of length >= 0."""
    if x not in af.arguments:
        raise UnknownArgument(x)
    succ: dict[ArgumentId, list[ArgumentId]] = {}
    for a, b in af.attacks:
        succ.setdefault(a, []).append(b)
    seen = {x}
    stack = [x]
    while stack:
        for y in succ.get(stack.pop(), ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


@dataclass(frozen=True)
class PreservationReport:
    semantics: Semantics
    saf_extensions: ExtensionSet
    dung_extensions: ExtensionSet
    equal: bool
    counterexample: frozenset[ArgumentId] | None = None


def check_preservation(saf: SAF, semantics, bound: int | None = None) -> PreservationReport:
    semantics = Semantics.parse(semantics)
    left = extensions(saf, semantics, bound)
    right = dung_extensions(forget(saf), semantics, bound)
    diff = left.as_set() ^ right.as_set()
    counter = min(diff, key=sorted) if diff else None
    return PreservationReport(semantics, left, right, not diff, counter)


def check_preservation_all(saf: SAF, bound: int | None = None) -> list[PreservationReport]:
    return [check_preservation(saf, s, bound) for s in ALL_SEMANTICS]


@dataclass(frozen=True)
class CollisionWitness:
    f1: SAF
    f2: SAF
    projected: DungAF = field(init=False)

    def __post_init__(self) -> None:
        p1, p2 = forget(self.f1), forget(self.f2)
        if self.f1 == self.f2:
            raise ValueError("collision witness needs two distinct frameworks")
        if p1 != p2:
            raise ValueError("collision witness frameworks have different projections")
        object.__setattr__(self, "projected", p1)


def canonical_names(n: int) -> list[ArgumentId]:
    return [f"a{i}" for i in range(1, n + 1)]


def enumerate_safs(max_args: int, min_args: int = 1) -> Iterator[SAF]:
    """Every valid SAF over ``a1..an`` for ``min_args <= n <= max_args``.

    Order: argument count, then the attack bitmask, then the subargument
    bitmask, both over ordered pairs in row-major order.  Candidates that
    fail validation are skipped.
    """
    for n in range(min_args, max_args + 1):
        names = canonical_names(n)
        pairs = list(product(names, repeat=2))
        for att_mask in range(1 << len(pairs)):
            att = [p for k, p in enumerate(pairs) if att_mask >> k & 1]
            for sub_mask in range(1 << len(pairs)):
                sub = [p for k, p in enumerate(pairs) if sub_mask >> k & 1]
                if any(x == y for x, y in sub):
                    continue
                try:
                    yield SAF(frozenset(names), frozenset(att), frozenset(sub))
                except ValidationError:
                    continue


def find_collision(max_args: int) -> CollisionWitness:
    """First pair of distinct SAFs with equal projections, in canonical order.

    ``f2`` is the earliest framework whose projection was already produced
    by an earlier framework ``f1``.  Raises ``NotFound`` if the universe of
    up to ``max_args`` arguments has none.
    """
    if max_args < 1:
        raise ValueError("max_args must be >= 1")
    seen: dict[DungAF, SAF] = {}
    for saf in enumerate_safs(max_args):
        proj = forget(saf)
        first = seen.setdefault(proj, saf)
        if first is not saf:
            return CollisionWitness(first, saf)
    raise NotFound(f"no collision among SAFs with at most {max_args} arguments")


def reach_divergence(saf: SAF) -> list[tuple[ArgumentId, frozenset[ArgumentId], frozenset[ArgumentId]]]:
    """Arguments whose superargument reach differs from their attack reach in the projection."""
    proj = forget(saf)
    out = []
    for x in sorted(saf.arguments):
        structural = saf.reach(x)
        attack = reach_attack(proj, x)
        if structural != attack:
            out.append((x, structural, attack))
    return out


def find_reach_divergence(max_args: int) -> SAF:
    """First SAF in canonical order with a nonempty ``reach_divergence``."""
    for saf in enumerate_safs(max_args):
        if reach_divergence(saf):
            return saf
    raise NotFound(f"no reach divergence among SAFs with at most {max_args} arguments")
