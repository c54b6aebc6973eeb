"""Data model: subargument frameworks (SAFs), Dung frameworks and closures.

An ``SAF`` is the triple ``(arguments, attacks, subargs)``; a pair ``(a, b)``
in ``subargs`` means that ``a`` is a subargument of ``b``.  Frameworks are
immutable and validated on construction, and the reflexive-transitive
subargument closure of every argument is computed once and cached.
"""

from __future__ import annotations

import hashlib
import json
import re
import sys
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Mapping

from .errors import InvalidName, NonMinimalAttack, SubCycle, UnknownArgument

ArgumentId = str
Pair = tuple[ArgumentId, ArgumentId]

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def check_name(name: object) -> ArgumentId:
    if not isinstance(name, str) or not NAME_RE.match(name):
        raise InvalidName(f"invalid argument name {name!r}: expected [A-Za-z0-9_]+")
    return sys.intern(name)


def _digest(kind: str, arguments, attacks, subargs=()) -> str:
    payload = json.dumps(
        [kind, sorted(arguments), sorted(map(list, attacks)), sorted(map(list, subargs))],
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()


@dataclass(frozen=True)
class ClosureTable:
    """Cached ``Sub*(a)`` (subs) and ``Reach(a)`` (supers) for every argument."""

    subs: Mapping[ArgumentId, frozenset[ArgumentId]]
    supers: Mapping[ArgumentId, frozenset[ArgumentId]]

    @classmethod
    def build(cls, arguments: Iterable[ArgumentId], subargs: Iterable[Pair]) -> "ClosureTable":
        preds: dict[ArgumentId, set[ArgumentId]] = {a: set() for a in arguments}
        for x, y in subargs:
            preds[y].add(x)
        try:
            order = list(TopologicalSorter(preds).static_order())
        except CycleError as exc:
            raise SubCycle(list(exc.args[1])) from None
        subs: dict[ArgumentId, frozenset[ArgumentId]] = {}
        for a in order:
            acc = {a}
            for p in preds[a]:
                acc |= subs[p]
            subs[a] = frozenset(acc)
        supers: dict[ArgumentId, set[ArgumentId]] = {a: set() for a in subs}
        for a, closure in subs.items():
            for x in closure:
                supers[x].add(a)
        return cls(subs, {a: frozenset(s) for a, s in supers.items()})


@dataclass(frozen=True)
class DungAF:
    """Attack-only framework ``(arguments, attacks)``."""

    arguments: frozenset[ArgumentId]
    attacks: frozenset[Pair]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arguments", frozenset(check_name(a) for a in self.arguments))
        object.__setattr__(self, "attacks", frozenset((a, b) for a, b in self.attacks))
        for a, b in sorted(self.attacks):
            for end in (a, b):
                if end not in self.arguments:
                    raise UnknownArgument(end, f"in attack ({a},{b})")

    def attackers(self, a: ArgumentId) -> frozenset[ArgumentId]:
        if a not in self.arguments:
            raise UnknownArgument(a)
        return frozenset(b for b, t in self.attacks if t == a)

    @property
    def digest(self) -> str:
        return _digest("af", self.arguments, self.attacks)

    def __len__(self) -> int:
        return len(self.arguments)


@dataclass(frozen=True)
class SAF:
    """Validated subargument framework.

    Construction enforces endpoint closure, acyclicity of ``subargs`` and
    attack minimality: no attack ``(a, b)`` may coexist with an attack
    ``(a, b2)`` on a proper subargument ``b2`` of ``b``.
    """

    arguments: frozenset[ArgumentId]
    attacks: frozenset[Pair] = frozenset()
    subargs: frozenset[Pair] = frozenset()
    closures: ClosureTable = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        args = frozenset(check_name(a) for a in self.arguments)
        attacks = frozenset((a, b) for a, b in self.attacks)
        subargs = frozenset((a, b) for a, b in self.subargs)
        for kind, pairs in (("attack", attacks), ("subargument edge", subargs)):
            for a, b in sorted(pairs):
                for end in (a, b):
                    if end not in args:
                        raise UnknownArgument(end, f"in {kind} ({a},{b})")
        closures = ClosureTable.build(sorted(args), sorted(subargs))
        for a, b in sorted(attacks):
            for b2 in sorted(closures.subs[b]):
                if b2 != b and (a, b2) in attacks:
                    raise NonMinimalAttack(a, b, b2)
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "subargs", subargs)
        object.__setattr__(self, "closures", closures)

    def __len__(self) -> int:
        return len(self.arguments)

    def _check(self, a: ArgumentId) -> None:
        if a not in self.arguments:
            raise UnknownArgument(a)

    def check_subset(self, arguments: Iterable[ArgumentId]) -> frozenset[ArgumentId]:
        """Return ``arguments`` as a frozenset, raising on unknown members."""
        out = frozenset(arguments)
        for a in sorted(out - self.arguments):
            raise UnknownArgument(a)
        return out

    def sub_closure(self, a: ArgumentId) -> frozenset[ArgumentId]:
        self._check(a)
        return self.closures.subs[a]

    def reach(self, x: ArgumentId) -> frozenset[ArgumentId]:
        self._check(x)
        return self.closures.supers[x]

    def attackers(self, a: ArgumentId) -> frozenset[ArgumentId]:
        self._check(a)
        return frozenset(b for b, t in self.attacks if t == a)

    @property
    def digest(self) -> str:
        return _digest("saf", self.arguments, self.attacks, self.subargs)


def validate(
    raw_arguments: Iterable[str],
    raw_attacks: Iterable[tuple[str, str]] = (),
    raw_subargs: Iterable[tuple[str, str]] = (),
) -> SAF:
    """Build an SAF from raw collections, deduplicating repeated entries.

    Raises ``UnknownArgument``, ``SubCycle`` or ``NonMinimalAttack`` when the
    input is not a valid framework.  The empty framework is valid.
    """
    return SAF(
        frozenset(raw_arguments),
        frozenset(tuple(p) for p in raw_attacks),
        frozenset(tuple(p) for p in raw_subargs),
    )


def sub_closure(saf: SAF, a: ArgumentId) -> frozenset[ArgumentId]:
    """All (direct and indirect) subarguments of ``a``, including ``a``."""
    return saf.sub_closure(a)


def reach_structural(saf: SAF, x: ArgumentId) -> frozenset[ArgumentId]:
    """All superarguments of ``x``, including ``x``."""
    return saf.reach(x)


def direct_attackers(saf: SAF, a: ArgumentId) -> frozenset[ArgumentId]:
    return saf.attackers(a)


def is_subargument_closed(saf: SAF, members: Iterable[ArgumentId]) -> bool:
    members = frozenset(members)
    return all(saf.closures.subs[a] <= members for a in members)
