"""Abstract argumentation with a primitive subargument relation.

Solvers for structure-sensitive extensions, the forgetful projection to
Dung frameworks, the conflict-handling core with status lifting, and
subargument-based justifications, plus a brute-force oracle.
"""

from importlib import resources

from .core import CoreDecomposition, check_core_first, core_extensions, decompose, lift
from .errors import (
    InstanceTooLarge,
    NonMinimalAttack,
    ParseError,
    SafError,
    SubCycle,
    UnknownArgument,
    ValidationError,
)
from .explanation import (
    Justification,
    explain,
    explanation_loss_witness,
    is_justification,
    minimal_justifications,
    principle_report,
)
from .framework import SAF, DungAF, direct_attackers, reach_structural, sub_closure, validate
from .oracle import oracle_dung, oracle_extensions
from .projection import (
    check_preservation,
    dung_extensions,
    find_collision,
    forget,
    reach_attack,
    reach_divergence,
)
from .safio import load_saf, parse, serialize
from .semantics import (
    ExtensionSet,
    Semantics,
    characteristic,
    conflict_free,
    defends,
    extensions,
    grounded,
    in_conflict,
)

__version__ = "0.1.0"

FIXTURES = ("motivating", "status_lift", "empty", "even_cycle", "self_defeat", "diamond")


def fixture_path(name: str):
    """Path-like handle to one of the bundled ``.saf`` example frameworks."""
    return resources.files(__name__) / "data" / f"{name}.saf"


def load_fixture(name: str) -> SAF:
    return parse(fixture_path(name).read_text(encoding="utf-8")).to_saf()
