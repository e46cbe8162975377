"""Exact computations with functors on finite directed posets and their
filtered reflections.

The heavy lifting happens in the compiled extension; this wrapper turns the
raw (ok, text, json_text) triple into a small result object with the machine
report already parsed.
"""

import json as _json
from dataclasses import dataclass, field

from . import _core
from ._core import FiltcatError, canonical_text, command_names, verify_suites

__all__ = [
    "CommandResult",
    "FiltcatError",
    "canonical_text",
    "command_names",
    "run",
    "verify",
    "verify_suites",
]


@dataclass
class CommandResult:
    ok: bool
    text: str
    report: dict = field(default_factory=dict)


def run(command, *args, **kwargs):
    """Run one command, e.g. run("op", "f", in_path=path, kind="im")."""
    ok, text, json_text = _core.run(command, args=[str(a) for a in args], **kwargs)
    return CommandResult(ok=ok, text=text, report=_json.loads(json_text))


def verify(suite, trials=200, seed=42):
    """Run one verification suite and return its parsed report."""
    return run("verify", suite=suite, trials=trials, seed=seed)
