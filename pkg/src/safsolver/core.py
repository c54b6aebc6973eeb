"""Conflict-handling core and status lifting.

Arguments that take part in a direct attack form the conflict-handling
(CH) core; the rest are status-dependent (SD).  Extensions of the core
framework are lifted to the whole SAF: an argument is accepted when every
CH member of its subargument closure is accepted in the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NotACoreSubset
from .framework import SAF, ArgumentId, DungAF
from .projection import dung_extensions, forget
from .semantics import ExtensionSet, Semantics, extensions


@dataclass(frozen=True)
class CoreDecomposition:
    ch: frozenset[ArgumentId]
    sd: frozenset[ArgumentId]
    core: DungAF


def decompose(saf: SAF) -> CoreDecomposition:
    ch = frozenset(x for pair in saf.attacks for x in pair)
    lifted = forget(saf).attacks
    core = DungAF(ch, frozenset((a, b) for a, b in lifted if a in ch and b in ch))
    return CoreDecomposition(ch, saf.arguments - ch, core)


def lift(saf: SAF, core_set: Iterable[ArgumentId], decomposition: CoreDecomposition | None = None) -> frozenset[ArgumentId]:
    """Status-lift of a core set: ``{a | Sub*(a) & CH <= core_set}``.

    Arguments without CH subarguments are always included.
    """
    dec = decomposition or decompose(saf)
    core_set = frozenset(core_set)
    if not core_set <= dec.ch:
        stray = sorted(core_set - dec.ch)
        raise NotACoreSubset(f"not conflict-handling arguments: {', '.join(stray)}")
    subs = saf.closures.subs
    return frozenset(a for a in saf.arguments if subs[a] & dec.ch <= core_set)


def core_extensions(saf: SAF, semantics, bound: int | None = None) -> ExtensionSet:
    semantics = Semantics.parse(semantics)
    dec = decompose(saf)
    core_exts = dung_extensions(dec.core, semantics, bound)
    return ExtensionSet.create(semantics, [lift(saf, e, dec) for e in core_exts], saf.digest)


@dataclass(frozen=True)
class CoreComparison:
    semantics: Semantics
    direct: ExtensionSet
    lifted: ExtensionSet
    equal: bool
    counterexample: frozenset[ArgumentId] | None


def compare_core(saf: SAF, semantics, bound: int | None = None) -> CoreComparison:
    """Compare ``semantics`` on the SAF with the lifted core extensions.

    Equality is only guaranteed for complete and grounded; for the other
    semantics this measures it.
    """
    semantics = Semantics.parse(semantics)
    direct = extensions(saf, semantics, bound)
    lifted = core_extensions(saf, semantics, bound)
    diff = direct.as_set() ^ lifted.as_set()
    return CoreComparison(semantics, direct, lifted, not diff, min(diff, key=sorted) if diff else None)


@dataclass(frozen=True)
class CoreFirstReport:
    complete_equal: bool
    grounded_equal: bool
    counterexample: frozenset[ArgumentId] | None

    @property
    def passed(self) -> bool:
        return self.complete_equal and self.grounded_equal


def check_core_first(saf: SAF, bound: int | None = None) -> CoreFirstReport:
    complete = compare_core(saf, Semantics.COMPLETE, bound)
    grounded = compare_core(saf, Semantics.GROUNDED, bound)
    counter = complete.counterexample if complete.counterexample is not None else grounded.counterexample
    return CoreFirstReport(complete.equal, grounded.equal, counter)
