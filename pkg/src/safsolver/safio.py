"""Reading and writing the ``arg``/``att``/``sub`` fact format.

::

    % the motivating chain
    arg(a).
    arg(b1).
    att(a,b1).
    sub(b1,b2).

``arg(x).`` declares an argument, ``att(x,y).`` a direct attack and
``sub(x,y).`` says that ``x`` is a subargument of ``y``.  ``%`` comments
run to the end of the line.  Attack-only files in the same syntax parse as
SAFs without subargument edges.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, UnknownFactType
from .framework import SAF, DungAF, validate

ARITY = {"arg": 1, "att": 2, "sub": 2}

_FACT = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*\(([^()]*)\)\s*\.")
_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Fact:
    kind: str
    args: tuple[str, ...]
    line: int
    column: int


@dataclass
class SafDocument:
    facts: list[Fact] = field(default_factory=list)
    source: str | None = None

    def arguments(self) -> list[str]:
        return [f.args[0] for f in self.facts if f.kind == "arg"]

    def attacks(self) -> list[tuple[str, str]]:
        return [(f.args[0], f.args[1]) for f in self.facts if f.kind == "att"]

    def subargs(self) -> list[tuple[str, str]]:
        return [(f.args[0], f.args[1]) for f in self.facts if f.kind == "sub"]

    def to_saf(self) -> SAF:
        return validate(self.arguments(), self.attacks(), self.subargs())


def parse(text: str, source: str | None = None) -> SafDocument:
    doc = SafDocument(source=source)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while True:
            while pos < len(line) and line[pos].isspace():
                pos += 1
            if pos >= len(line):
                break
            m = _FACT.match(line, pos)
            if m is None:
                raise ParseError("expected a fact of the form name(args).", lineno, pos + 1)
            functor = m.group(1)
            col = m.start(1) + 1
            if functor not in ARITY:
                raise UnknownFactType(f"unknown fact type {functor!r}", lineno, col)
            args = tuple(a.strip() for a in m.group(2).split(","))
            if len(args) != ARITY[functor]:
                raise ParseError(
                    f"{functor} takes {ARITY[functor]} argument(s), got {len(args)}", lineno, col
                )
            for a in args:
                if not _NAME.match(a):
                    raise ParseError(f"invalid argument name {a!r}", lineno, m.start(2) + 1)
            doc.facts.append(Fact(functor, args, lineno, col))
            pos = m.end()
    return doc


def load(path: str | Path) -> SafDocument:
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), source=str(path))


def load_saf(path: str | Path) -> SAF:
    return load(path).to_saf()


def serialize(framework: SAF | DungAF) -> str:
    """Canonical text: arguments, then attacks, then subargument edges, each sorted."""
    lines = [f"arg({a})." for a in sorted(framework.arguments)]
    lines += [f"att({a},{b})." for a, b in sorted(framework.attacks)]
    if isinstance(framework, SAF):
        lines += [f"sub({a},{b})." for a, b in sorted(framework.subargs)]
    return "\n".join(lines) + "\n"
