"""Subargument-based justifications of accepted arguments.

A local justification of ``a`` in ``E`` is a subset ``J`` of ``E`` that is
closed under subarguments, contains ``Sub*(a)`` and answers every attack on
a member of ``Sub*(a)`` from inside ``J``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    InstanceTooLarge,
    NoJustification,
    NotAMember,
    NotAnExtension,
    NotFound,
    UnknownArgument,
)
from .framework import SAF, ArgumentId, is_subargument_closed
from .projection import check_preservation, enumerate_safs, forget
from .semantics import ALL_SEMANTICS, Semantics, characteristic, enumeration_bound, extensions


def _answers(saf: SAF, J: frozenset[ArgumentId], attacker: ArgumentId) -> bool:
    subs = saf.closures.subs
    for c in J:
        if (c, attacker) in saf.attacks:
            return True
        if any((c, b2) in saf.attacks for b2 in subs[attacker]):
            return True
    return False


def is_justification(saf: SAF, extension: Iterable[ArgumentId], a: ArgumentId, witness: Iterable[ArgumentId]) -> bool:
    E = saf.check_subset(extension)
    J = saf.check_subset(witness)
    closure = saf.sub_closure(a)
    if a not in E or not J <= E:
        return False
    if not is_subargument_closed(saf, J):
        return False
    if not closure <= J:
        return False
    return all(_answers(saf, J, b) for b, x in saf.attacks if x in closure)


def minimal_justifications(
    saf: SAF, extension: Iterable[ArgumentId], a: ArgumentId, bound: int | None = None
) -> frozenset[frozenset[ArgumentId]]:
    """Every inclusion-minimal local justification of ``a`` in ``extension``.

    Candidates are ``Sub*(a)`` plus subsets of the rest of the extension,
    tried by increasing size; a candidate containing an earlier hit is not
    minimal.
    """
    E = saf.check_subset(extension)
    if a not in saf.arguments:
        raise UnknownArgument(a)
    bound = enumeration_bound() if bound is None else bound
    if len(E) > bound:
        raise InstanceTooLarge(len(E), bound, "justification search")
    closure = saf.sub_closure(a)
    if a not in E or not closure <= E:
        return frozenset()
    rest = sorted(E - closure)
    found: list[frozenset[ArgumentId]] = []
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            J = closure | frozenset(extra)
            if any(f <= J for f in found):
                continue
            if is_justification(saf, E, a, J):
                found.append(J)
    return frozenset(found)


@dataclass(frozen=True)
class Justification:
    target: ArgumentId
    extension: frozenset[ArgumentId]
    witness: frozenset[ArgumentId]
    minimal: bool = True


def _pick(candidates: Iterable[frozenset[ArgumentId]]) -> frozenset[ArgumentId]:
    return min(candidates, key=lambda j: (len(j), sorted(j)))


def explain(saf: SAF, semantics, extension: Iterable[ArgumentId], a: ArgumentId) -> Justification:
    """Canonical minimal justification: fewest members, then lexicographically least."""
    semantics = Semantics.parse(semantics)
    E = saf.check_subset(extension)
    if a not in saf.arguments:
        raise UnknownArgument(a)
    if E not in extensions(saf, semantics):
        raise NotAnExtension(f"{{{', '.join(sorted(E))}}} is not a {semantics} extension")
    if a not in E:
        raise NotAMember(f"{a} is not in the extension")
    candidates = minimal_justifications(saf, E, a)
    if not candidates:
        raise NoJustification(f"{a} has no local justification in this extension")
    return Justification(a, E, _pick(candidates))


@dataclass(frozen=True)
class LossWitness:
    """Two SAFs with the same attacks and projection, one shared extension,
    and an argument whose closure, and hence explanation, differs."""

    f1: SAF
    f2: SAF
    argument: ArgumentId
    extension: frozenset[ArgumentId]
    semantics: Semantics = Semantics.COMPLETE
    explanation1: Justification = field(init=False)
    explanation2: Justification = field(init=False)

    def __post_init__(self) -> None:
        f1, f2, a, E = self.f1, self.f2, self.argument, self.extension
        if f1.attacks != f2.attacks or forget(f1) != forget(f2):
            raise ValueError("loss witness frameworks must share attacks and projection")
        if f1.sub_closure(a) == f2.sub_closure(a):
            raise ValueError("loss witness argument must have different closures")
        e1 = explain(f1, self.semantics, E, a)
        e2 = explain(f2, self.semantics, E, a)
        if e1.witness == e2.witness:
            raise ValueError("loss witness explanations coincide")
        object.__setattr__(self, "explanation1", e1)
        object.__setattr__(self, "explanation2", e2)

    def __iter__(self):
        return iter((self.f1, self.f2, self.argument, self.extension))


def explanation_loss_witness(max_args: int = 3, semantics=Semantics.COMPLETE) -> LossWitness:
    """Search canonical SAFs for a pair that the projection cannot tell apart
    but whose explanations of a shared accepted argument differ."""
    semantics = Semantics.parse(semantics)
    groups: dict[tuple, list[SAF]] = {}
    for saf in enumerate_safs(max_args):
        key = (saf.arguments, saf.attacks, forget(saf))
        earlier = groups.setdefault(key, [])
        exts = extensions(saf, semantics).as_set()
        for other in earlier:
            shared = exts & extensions(other, semantics).as_set()
            for E in sorted(shared, key=sorted):
                for a in sorted(E):
                    if other.sub_closure(a) == saf.sub_closure(a):
                        continue
                    try:
                        return LossWitness(other, saf, a, E, semantics)
                    except (ValueError, NoJustification):
                        continue
        earlier.append(saf)
    raise NotFound(f"no explanation-loss witness with at most {max_args} arguments")


# --- principle checks -------------------------------------------------------

PRINCIPLES = (
    "separation",
    "structure_sensitive_defence",
    "commitment",
    "conservative_extension",
    "subargument_justification",
)

SEPARATION_RATIONALE = (
    "attacks and subargument edges are stored as independent fields of every "
    "framework; neither is derived from the other"
)


@dataclass
class PrincipleVerdict:
    name: str
    checked: int = 0
    counterexample: dict | None = None
    rationale: str = ""

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class PrincipleReport:
    verdicts: dict[str, PrincipleVerdict]
    instances: int

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())


def _literal_defended(saf: SAF, E: frozenset[ArgumentId], a: ArgumentId) -> bool:
    for x in saf.sub_closure(a):
        for b in saf.attackers(x):
            if not any((c, b2) in saf.attacks for c in E for b2 in saf.sub_closure(b)):
                return False
    return True


EXHAUSTIVE_DEFENCE_PROBE = 10


def _defence_probes(saf, admissible, complete):
    if len(saf) <= EXHAUSTIVE_DEFENCE_PROBE:
        items = sorted(saf.arguments)
        return [frozenset(c) for k in range(len(items) + 1) for c in combinations(items, k)]
    return sorted({*admissible, *complete}, key=sorted)


def _fail(verdict: PrincipleVerdict, index: int, **detail) -> None:
    if verdict.counterexample is None:
        verdict.counterexample = {"instance": index, **detail}


def principle_report(corpus: Sequence[SAF], bound: int | None = None) -> PrincipleReport:
    verdicts = {name: PrincipleVerdict(name) for name in PRINCIPLES}
    verdicts["separation"].rationale = SEPARATION_RATIONALE
    bound = enumeration_bound() if bound is None else bound
    for index, saf in enumerate(corpus):
        if len(saf) > bound:
            raise InstanceTooLarge(len(saf), bound)
        verdicts["separation"].checked += 1

        v = verdicts["structure_sensitive_defence"]
        admissible = extensions(saf, Semantics.ADMISSIBLE, bound)
        complete = extensions(saf, Semantics.COMPLETE, bound)
        for E in _defence_probes(saf, admissible, complete):
            defended = characteristic(saf, E)
            for a in sorted(saf.arguments):
                v.checked += 1
                if (a in defended) != _literal_defended(saf, E, a):
                    _fail(v, index, extension=sorted(E), argument=a)

        v = verdicts["commitment"]
        for E in admissible:
            for a in sorted(E):
                v.checked += 1
                if not _literal_defended(saf, E, a):
                    _fail(v, index, extension=sorted(E), argument=a)

        v = verdicts["conservative_extension"]
        for s in ALL_SEMANTICS:
            v.checked += 1
            rep = check_preservation(saf, s, bound)
            if not rep.equal:
                _fail(v, index, semantics=str(s), extension=sorted(rep.counterexample or ()))

        v = verdicts["subargument_justification"]
        for E in complete:
            for a in sorted(E):
                v.checked += 1
                if not minimal_justifications(saf, E, a, bound):
                    _fail(v, index, extension=sorted(E), argument=a)
    return PrincipleReport(verdicts, len(corpus))
