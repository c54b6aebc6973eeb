"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse or validation error,
3 property violation (fast/oracle disagreement, failed principle check).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .core import check_core_first, compare_core, decompose
from .errors import InstanceTooLarge, NotFound, ParseError, SafError, ValidationError
from .explanation import PRINCIPLES, explain, explanation_loss_witness, principle_report
from .framework import SAF
from .generate import random_corpus
from .oracle import oracle_extensions
from .projection import (
    check_preservation,
    dung_extensions,
    find_collision,
    find_reach_divergence,
    forget,
    reach_attack,
    reach_divergence,
)
from .safio import load_saf, serialize
from .semantics import ALL_SEMANTICS, Semantics, extensions

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt_set(items) -> str:
    return "{" + ", ".join(sorted(items)) + "}"


def _pairs(pairs) -> list[list[str]]:
    return [list(p) for p in sorted(pairs)]


class Result:
    """What a command produced: text lines plus a JSON payload."""

    def __init__(self, command: str, saf: SAF | None = None, semantics: Semantics | None = None):
        self.command = command
        self.digest = saf.digest if saf is not None else None
        self.semantics = semantics
        self.lines: list[str] = []
        self.payload: dict[str, Any] = {}
        self.code = EXIT_OK
        self.errors: list[str] = []

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "input_digest": self.digest,
            "semantics": str(self.semantics) if self.semantics is not None else None,
            "version": __version__,
            **self.payload,
        }
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_validate(ns) -> Result:
    saf = load_saf(ns.file)
    res = Result("validate", saf)
    res.lines.append(
        f"valid: {len(saf.arguments)} arguments, {len(saf.attacks)} attacks, "
        f"{len(saf.subargs)} subargument edges"
    )
    res.payload["report"] = {
        "valid": True,
        "arguments": sorted(saf.arguments),
        "attacks": _pairs(saf.attacks),
        "subargs": _pairs(saf.subargs),
    }
    return res


def cmd_solve(ns) -> Result:
    saf = load_saf(ns.file)
    sem = Semantics.parse(ns.semantics)
    res = Result("solve", saf, sem)
    if ns.mode == "oracle":
        exts = oracle_extensions(saf, sem)
    else:
        exts = extensions(saf, sem)
    if ns.mode == "both":
        other = oracle_extensions(saf, sem)
        diff = exts.as_set() ^ other.as_set()
        if diff:
            witness = min(diff, key=sorted)
            side = "fast" if witness in exts else "oracle"
            res.code = EXIT_VIOLATION
            res.errors.append(
                f"fast and oracle disagree on {sem}: {fmt_set(witness)} only found by {side}"
            )
    res.payload["extensions"] = exts.as_lists()
    res.lines.append(f"{sem} extensions ({len(exts)}):")
    res.lines += [f"  {fmt_set(e)}" for e in exts]
    return res


def cmd_project(ns) -> Result:
    saf = load_saf(ns.file)
    af = forget(saf)
    res = Result("project", saf)
    doc = serialize(af)
    res.lines.append(doc.rstrip("\n"))
    res.payload["report"] = {
        "arguments": sorted(af.arguments),
        "attacks": _pairs(af.attacks),
        "document": doc,
    }
    return res


def cmd_core(ns) -> Result:
    saf = load_saf(ns.file)
    sem = Semantics.parse(ns.semantics)
    dec = decompose(saf)
    cmp = compare_core(saf, sem)
    res = Result("core", saf, sem)
    res.lines += [
        f"conflict-handling: {fmt_set(dec.ch)}",
        f"status-dependent:  {fmt_set(dec.sd)}",
        "core attacks:      " + ", ".join(f"({a},{b})" for a, b in sorted(dec.core.attacks)),
        f"lifted {sem} extensions ({len(cmp.lifted)}):",
    ]
    res.lines += [f"  {fmt_set(e)}" for e in cmp.lifted]
    res.lines.append(f"equal to direct {sem} extensions: {'yes' if cmp.equal else 'no'}")
    res.payload["report"] = {
        "ch": sorted(dec.ch),
        "sd": sorted(dec.sd),
        "core_attacks": _pairs(dec.core.attacks),
        "core_extensions": dung_extensions(dec.core, sem).as_lists(),
        "lifted_extensions": cmp.lifted.as_lists(),
        "equal_to_direct": cmp.equal,
    }
    return res


def cmd_reach(ns) -> Result:
    saf = load_saf(ns.file)
    structural = saf.reach(ns.arg)
    attack = reach_attack(forget(saf), ns.arg)
    res = Result("reach", saf)
    res.lines += [
        f"structural reach of {ns.arg}: {fmt_set(structural)}",
        f"attack reach of {ns.arg}:     {fmt_set(attack)}",
    ]
    res.payload["report"] = {
        "argument": ns.arg,
        "structural": sorted(structural),
        "attack": sorted(attack),
        "diverges": structural != attack,
    }
    return res


def cmd_explain(ns) -> Result:
    saf = load_saf(ns.file)
    sem = Semantics.parse(ns.semantics)
    ext = [x.strip() for x in ns.extension.split(",") if x.strip()]
    j = explain(saf, sem, ext, ns.arg)
    res = Result("explain", saf, sem)
    res.lines.append(f"justification of {j.target} in {fmt_set(j.extension)}: {fmt_set(j.witness)}")
    res.payload["report"] = {
        "target": j.target,
        "extension": sorted(j.extension),
        "witness": sorted(j.witness),
        "minimal": j.minimal,
    }
    return res


def cmd_witness(ns) -> Result:
    res = Result("witness")
    if ns.kind == "collision":
        w = find_collision(ns.max_args)
        res.lines += ["% F1", serialize(w.f1).rstrip("\n"), "% F2", serialize(w.f2).rstrip("\n"),
                      "% common projection", serialize(w.projected).rstrip("\n")]
        res.payload["witness"] = {"f1": serialize(w.f1), "f2": serialize(w.f2), "projected": serialize(w.projected)}
    elif ns.kind == "reach":
        saf = find_reach_divergence(ns.max_args)
        rows = reach_divergence(saf)
        res.lines += ["% framework", serialize(saf).rstrip("\n")]
        res.lines += [f"% {x}: structural {fmt_set(s)} vs attack {fmt_set(a)}" for x, s, a in rows]
        res.payload["witness"] = {
            "framework": serialize(saf),
            "divergence": [{"argument": x, "structural": sorted(s), "attack": sorted(a)} for x, s, a in rows],
        }
    else:
        w = explanation_loss_witness(ns.max_args)
        res.semantics = w.semantics
        res.lines += [
            "% F1", serialize(w.f1).rstrip("\n"), "% F2", serialize(w.f2).rstrip("\n"),
            f"% extension {fmt_set(w.extension)}, argument {w.argument}",
            f"% explanation in F1: {fmt_set(w.explanation1.witness)}",
            f"% explanation in F2: {fmt_set(w.explanation2.witness)}",
        ]
        res.payload["witness"] = {
            "f1": serialize(w.f1),
            "f2": serialize(w.f2),
            "argument": w.argument,
            "extension": sorted(w.extension),
            "explanation1": sorted(w.explanation1.witness),
            "explanation2": sorted(w.explanation2.witness),
        }
    return res


def _corpus(ns) -> list[SAF]:
    corpus = [load_saf(ns.file)] if ns.file else []
    if ns.random:
        corpus += random_corpus(ns.seed, ns.random, ns.max_args)
    if not corpus:
        raise UsageError("check needs a FILE or --random N")
    return corpus


def cmd_check(ns) -> Result:
    corpus = _corpus(ns)
    res = Result("check", corpus[0] if ns.file else None)
    if ns.principles:
        rep = principle_report(corpus)
        for name in PRINCIPLES:
            v = rep.verdicts[name]
            status = "pass" if v.passed else "FAIL"
            extra = f" ({v.rationale})" if v.rationale else ""
            res.lines.append(f"{name}: {status}, {v.checked} checks{extra}")
            if not v.passed:
                res.errors.append(f"{name} violated: {json.dumps(v.counterexample, sort_keys=True)}")
        res.payload["report"] = {
            "instances": rep.instances,
            "seed": ns.seed if ns.random else None,
            "principles": {
                name: {
                    "passed": v.passed,
                    "checked": v.checked,
                    "counterexample": v.counterexample,
                    "rationale": v.rationale or None,
                }
                for name, v in rep.verdicts.items()
            },
        }
        ok = rep.passed
    else:
        failures: list[dict] = []
        for i, saf in enumerate(corpus):
            for sem in ALL_SEMANTICS:
                if extensions(saf, sem).as_set() != oracle_extensions(saf, sem).as_set():
                    failures.append({"instance": i, "check": "oracle", "semantics": str(sem)})
                if not check_preservation(saf, sem).equal:
                    failures.append({"instance": i, "check": "preservation", "semantics": str(sem)})
            if not check_core_first(saf).passed:
                failures.append({"instance": i, "check": "core_first"})
        res.lines.append(f"checked {len(corpus)} framework(s): {len(failures)} violation(s)")
        res.errors += [json.dumps(f, sort_keys=True) for f in failures]
        res.payload["report"] = {"instances": len(corpus), "violations": failures,
                                 "seed": ns.seed if ns.random else None}
        ok = not failures
    if not ok:
        res.code = EXIT_VIOLATION
    return res


def build_parser() -> argparse.ArgumentParser:
    sem_choices = [s.value for s in Semantics]
    p = _Parser(prog="safsolver", description="Solve argumentation frameworks with subarguments.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, with_file=True):
        sp = sub.add_parser(name, help=help_text)
        if with_file:
            sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="emit one JSON object")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check that a file describes a valid SAF")
    sp = add("solve", cmd_solve, "compute extensions")
    sp.add_argument("--semantics", required=True, choices=sem_choices)
    sp.add_argument("--mode", choices=["fast", "oracle", "both"], default="fast")
    add("project", cmd_project, "print the forgetful projection as an att-only document")
    sp = add("core", cmd_core, "conflict-handling core and lifted extensions")
    sp.add_argument("--semantics", default="complete", choices=sem_choices)
    sp = add("reach", cmd_reach, "structural vs attack reach of one argument")
    sp.add_argument("--arg", required=True)
    sp = add("explain", cmd_explain, "minimal justification of an accepted argument")
    sp.add_argument("--semantics", required=True, choices=sem_choices)
    sp.add_argument("--extension", required=True, help='comma-separated members, e.g. "a,b"')
    sp.add_argument("--arg", required=True)
    sp = add("witness", cmd_witness, "search for expressiveness witnesses", with_file=False)
    sp.add_argument("--kind", required=True, choices=["collision", "reach", "explanation"])
    sp.add_argument("--max-args", type=int, default=3)
    sp = add("check", cmd_check, "property checks over a file and/or a random corpus", with_file=False)
    sp.add_argument("file", nargs="?")
    sp.add_argument("--principles", action="store_true", help="run the principle report")
    sp.add_argument("--random", type=int, default=0, metavar="N", help="add N random frameworks")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-args", type=int, default=6)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # --help and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        res = ns.func(ns)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, InstanceTooLarge, NotFound, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SafError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = res.to_json() if ns.json else "\n".join(res.lines) + "\n"
    sys.stdout.write(out)
    for err in res.errors:
        print(err, file=sys.stderr)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
