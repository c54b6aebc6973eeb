"""Structure-sensitive conflict, defence and extension semantics for SAFs.

Conflict and defence look through subargument closures: two arguments
conflict when some subargument of one attacks some subargument of the
other, and ``a`` is defended by ``E`` when every attack on any member of
``Sub*(a)`` is answered from ``E`` by an attack on some subargument of the
attacker.

Enumeration-based semantics run on a bitmask encoding of the framework
(``MaskedFramework``), which the Dung solver in ``projection`` reuses.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InstanceTooLarge
from .framework import SAF, ArgumentId

DEFAULT_ENUM_BOUND = 20
BOUND_ENV = "SAF_ENUM_BOUND"


class Semantics(str, enum.Enum):
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"

    @classmethod
    def parse(cls, text: "str | Semantics") -> "Semantics":
        if isinstance(text, Semantics):
            return text
        key = text.strip().lower()
        short = {"adm": "admissible", "cmp": "complete", "co": "complete", "grd": "grounded",
                 "gr": "grounded", "prf": "preferred", "pr": "preferred", "stb": "stable",
                 "st": "stable"}
        try:
            return cls(short.get(key, key))
        except ValueError:
            raise ValueError(f"unknown semantics {text!r}") from None

    def __str__(self) -> str:
        return self.value


ALL_SEMANTICS: tuple[Semantics, ...] = tuple(Semantics)


def enumeration_bound() -> int:
    """Subset-enumeration bound; ``SAF_ENUM_BOUND`` overrides the default of 20."""
    raw = os.environ.get(BOUND_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ENUM_BOUND
    return int(raw)


def canonical_order(extensions: Iterable[Iterable[ArgumentId]]) -> tuple[frozenset[ArgumentId], ...]:
    unique = {frozenset(e) for e in extensions}
    return tuple(sorted(unique, key=lambda e: sorted(e)))


@dataclass(frozen=True)
class ExtensionSet:
    semantics: Semantics
    extensions: tuple[frozenset[ArgumentId], ...]
    framework_digest: str

    @classmethod
    def create(cls, semantics, extensions, framework_digest: str) -> "ExtensionSet":
        return cls(Semantics.parse(semantics), canonical_order(extensions), framework_digest)

    def __iter__(self) -> Iterator[frozenset[ArgumentId]]:
        return iter(self.extensions)

    def __len__(self) -> int:
        return len(self.extensions)

    def __contains__(self, item: object) -> bool:
        try:
            return frozenset(item) in self.extensions  # type: ignore[arg-type]
        except TypeError:
            return False

    def as_set(self) -> frozenset[frozenset[ArgumentId]]:
        return frozenset(self.extensions)

    def as_lists(self) -> list[list[ArgumentId]]:
        return [sorted(e) for e in self.extensions]


# --- set-level operations ---------------------------------------------------


def in_conflict(saf: SAF, a: ArgumentId, b: ArgumentId) -> bool:
    """True iff some subargument of ``a`` directly attacks some subargument of ``b``.

    Not symmetric: ``in_conflict(saf, a, b)`` only looks at attacks leaving
    ``Sub*(a)``.
    """
    sources = saf.sub_closure(a)
    targets = saf.sub_closure(b)
    return any(x in sources and y in targets for x, y in saf.attacks)


def conflict_free(saf: SAF, extension: Iterable[ArgumentId]) -> bool:
    members = sorted(saf.check_subset(extension))
    return not any(in_conflict(saf, a, b) for a in members for b in members)


def _counters(saf: SAF, attacker: ArgumentId) -> frozenset[ArgumentId]:
    """Arguments that attack some subargument of ``attacker``."""
    closure = saf.closures.subs[attacker]
    return frozenset(c for c, t in saf.attacks if t in closure)


def defends(saf: SAF, extension: Iterable[ArgumentId], a: ArgumentId) -> bool:
    members = saf.check_subset(extension)
    closure = saf.sub_closure(a)
    for b, x in saf.attacks:
        if x in closure and not (_counters(saf, b) & members):
            return False
    return True


def characteristic(saf: SAF, extension: Iterable[ArgumentId]) -> frozenset[ArgumentId]:
    """The set of arguments defended by ``extension``."""
    members = saf.check_subset(extension)
    return frozenset(a for a in saf.arguments if defends(saf, members, a))


# --- bitmask engine ---------------------------------------------------------


class MaskedFramework:
    """Bitmask view of a framework for fast enumeration.

    ``threats[i]`` lists, for every argument whose attack must be answered
    for ``i`` to be defended, the mask of arguments that answer it.
    ``conflicts[i]`` is the mask of arguments that may not share an
    extension with ``i`` (bit ``i`` set for self-conflicting arguments), and
    ``hits[i]`` the mask of arguments whose membership excludes ``i`` in the
    sense used by stable semantics.
    """

    def __init__(
        self,
        names: Sequence[ArgumentId],
        threats: Sequence[Sequence[int]],
        conflicts: Sequence[int],
        hits: Sequence[int],
    ) -> None:
        self.names = list(names)
        self.n = len(self.names)
        self.threats = [tuple(t) for t in threats]
        self.conflicts = list(conflicts)
        self.hits = list(hits)
        self.full = (1 << self.n) - 1

    @classmethod
    def from_saf(cls, saf: SAF) -> "MaskedFramework":
        names = sorted(saf.arguments)
        idx = {a: i for i, a in enumerate(names)}
        subs = saf.closures.subs
        supers = saf.closures.supers
        attackers_of: dict[ArgumentId, set[ArgumentId]] = {a: set() for a in names}
        targets_of: dict[ArgumentId, set[ArgumentId]] = {a: set() for a in names}
        for b, x in saf.attacks:
            attackers_of[x].add(b)
            targets_of[b].add(x)

        def mask(items: Iterable[ArgumentId]) -> int:
            m = 0
            for it in items:
                m |= 1 << idx[it]
            return m

        counter = {b: mask(c for y in subs[b] for c in attackers_of[y]) for b in names}
        threats = []
        for a in names:
            threat_args = sorted({b for x in subs[a] for b in attackers_of[x]})
            threats.append([counter[b] for b in threat_args])
        # out[i]: arguments j with in_conflict(i, j)
        out = [mask(z for x in subs[a] for y in targets_of[x] for z in supers[y]) for a in names]
        hits = [0] * len(names)
        for i, m in enumerate(out):
            for j in range(len(names)):
                if m >> j & 1:
                    hits[j] |= 1 << i
        conflicts = [out[i] | hits[i] for i in range(len(names))]
        return cls(names, threats, conflicts, hits)

    def to_mask(self, members: Iterable[ArgumentId]) -> int:
        idx = {a: i for i, a in enumerate(self.names)}
        m = 0
        for a in members:
            m |= 1 << idx[a]
        return m

    def to_set(self, m: int) -> frozenset[ArgumentId]:
        return frozenset(self.names[i] for i in range(self.n) if m >> i & 1)

    def defended(self, m: int) -> int:
        out = 0
        for i, threats in enumerate(self.threats):
            if all(m & t for t in threats):
                out |= 1 << i
        return out

    def is_conflict_free(self, m: int) -> bool:
        i = 0
        rest = m
        while rest:
            if rest & 1 and self.conflicts[i] & m:
                return False
            rest >>= 1
            i += 1
        return True

    def conflict_free_sets(self) -> Iterator[int]:
        """Yield every conflict-free mask, in increasing cardinality."""
        level = [(0, -1)]
        while level:
            nxt = []
            for m, last in level:
                yield m
                for j in range(last + 1, self.n):
                    if not self.conflicts[j] & (m | 1 << j):
                        nxt.append((m | 1 << j, j))
            level = nxt

    def grounded(self) -> int:
        m = 0
        while True:
            nxt = self.defended(m)
            if nxt == m:
                return m
            m = nxt

    def covers_complement(self, m: int) -> bool:
        outside = self.full & ~m
        return all(self.hits[j] & m for j in range(self.n) if outside >> j & 1)

    def solve(self, semantics: Semantics, bound: int | None = None) -> list[int]:
        semantics = Semantics.parse(semantics)
        if semantics is Semantics.GROUNDED:
            return [self.grounded()]
        bound = enumeration_bound() if bound is None else bound
        if self.n > bound:
            raise InstanceTooLarge(self.n, bound)
        found: list[int] = []
        for m in self.conflict_free_sets():
            if semantics is Semantics.STABLE:
                if self.covers_complement(m):
                    found.append(m)
                continue
            d = self.defended(m)
            if semantics is Semantics.ADMISSIBLE:
                if m & d == m:
                    found.append(m)
            elif d == m:
                found.append(m)
        if semantics is Semantics.PREFERRED:
            found = _maximal(found)
        return found


def _maximal(masks: list[int]) -> list[int]:
    by_size = sorted(masks, key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in by_size:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@lru_cache(maxsize=256)
def masked(saf: SAF) -> MaskedFramework:
    return MaskedFramework.from_saf(saf)


def grounded(saf: SAF) -> ExtensionSet:
    """Least fixpoint of the characteristic function, by Kleene iteration from the empty set."""
    mf = masked(saf)
    return ExtensionSet.create(Semantics.GROUNDED, [mf.to_set(mf.grounded())], saf.digest)


def extensions(saf: SAF, semantics: "Semantics | str", bound: int | None = None) -> ExtensionSet:
    """All extensions of ``saf`` under ``semantics``.

    Preferred extensions are the maximal complete ones.  A conflict-free
    set is stable when every outside argument is in conflict with some
    member, the conflict originating in that member's closure.  Raises
    ``InstanceTooLarge`` for non-grounded semantics above the bound.
    """
    semantics = Semantics.parse(semantics)
    if semantics is Semantics.GROUNDED:
        return grounded(saf)
    mf = masked(saf)
    return ExtensionSet.create(semantics, [mf.to_set(m) for m in mf.solve(semantics, bound)], saf.digest)
