"""Brute-force reference semantics.

Everything here is a literal transcription of the definitions, evaluated
over every subset of the argument set with no pruning.  It deliberately
recomputes subargument closures from the raw ``subargs`` pairs and shares
no conflict or defence code with the fast solvers; tests compare the two.
"""

from __future__ import annotations

from itertools import chain, combinations

from .errors import InstanceTooLarge
from .framework import SAF, DungAF
from .semantics import ExtensionSet, Semantics

ORACLE_CAP = 16


def _all_subsets(arguments):
    items = sorted(arguments)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def _closure_of(subargs, a):
    # naive fixpoint; no reuse of the cached table
    result = {a}
    changed = True
    while changed:
        changed = False
        for x, y in subargs:
            if y in result and x not in result:
                result.add(x)
                changed = True
    return result


def _classify(arguments, cf, defended, hit, semantics):
    semantics = Semantics.parse(semantics)
    if len(arguments) > ORACLE_CAP:
        raise InstanceTooLarge(len(arguments), ORACLE_CAP, "oracle sweep")
    subsets = _all_subsets(arguments)
    admissible = []
    complete = []
    stable = []
    for E in subsets:
        if not cf(E):
            continue
        if all(defended(E, a) for a in E):
            admissible.append(E)
            if all(a in E for a in arguments if defended(E, a)):
                complete.append(E)
        if all(any(hit(e, a) for e in E) for a in arguments if a not in E):
            stable.append(E)
    if semantics is Semantics.ADMISSIBLE:
        return admissible
    if semantics is Semantics.COMPLETE:
        return complete
    if semantics is Semantics.STABLE:
        return stable
    if semantics is Semantics.PREFERRED:
        return [E for E in complete if not any(E < F for F in complete)]
    least = [E for E in complete if all(E <= F for F in complete)]
    assert len(least) == 1, "no least complete set"
    return least


def oracle_extensions(saf: SAF, semantics) -> ExtensionSet:
    A = set(saf.arguments)
    Att = set(saf.attacks)
    Sub = set(saf.subargs)
    closure = {a: _closure_of(Sub, a) for a in A}

    def conflict(a, b):
        return any((x, y) in Att for x in closure[a] for y in closure[b])

    def cf(E):
        return not any(conflict(a, b) for a in E for b in E)

    def defended(E, a):
        for x in closure[a]:
            for b in A:
                if (b, x) in Att:
                    if not any((c, b2) in Att for c in E for b2 in closure[b]):
                        return False
        return True

    found = _classify(A, cf, defended, conflict, semantics)
    return ExtensionSet.create(semantics, found, saf.digest)


def oracle_dung(af: DungAF, semantics) -> ExtensionSet:
    A = set(af.arguments)
    Att = set(af.attacks)

    def cf(E):
        return not any((a, b) in Att for a in E for b in E)

    def defended(E, a):
        return all(any((c, b) in Att for c in E) for b in A if (b, a) in Att)

    def attacks(e, a):
        return (e, a) in Att

    found = _classify(A, cf, defended, attacks, semantics)
    return ExtensionSet.create(semantics, found, af.digest)
