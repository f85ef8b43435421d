"""
JSON report envelope.

Every command emits
``{tool_version, lie_type, command, results, checks: [{name, pass, detail}]}``.
Weights are arrays in fundamental coordinates, non-integral rationals are
"p/q" strings, and keys are sorted so two runs of the same command differ at
most in ``runtime_ms``.
"""
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

from lie import __version__
from lie.kostant import Check, ConjectureReport, SaturationReport
from lie.utils import IndexSet, format_rational


def to_jsonable(value: Any) -> Any:
    """Recursively convert rationals, tuples and NamedTuples to JSON-ready values."""
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if hasattr(value, "_asdict"):
        return {key: to_jsonable(item) for key, item in value._asdict().items()}
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return value


def index_set_label(J: IndexSet) -> str:
    return "{" + ",".join(str(i) for i in J) + "}"


def checks_json(checks: Iterable[Check]) -> List[Dict[str, Any]]:
    return [{"name": c.name, "pass": bool(c.passed), "detail": c.detail} for c in checks]


def conjecture_results(report: ConjectureReport) -> Dict[str, Any]:
    return to_jsonable(report._asdict())


def saturation_results(report: SaturationReport) -> Dict[str, Any]:
    return to_jsonable(report._asdict())


def vertex_results(vertex_set: Dict[IndexSet, Sequence]) -> List[Dict[str, Any]]:
    return [{"J": list(J), "weight": to_jsonable(v)} for J, v in vertex_set.items()]


def build_report(lie_type: str, command: str, results: Any, checks: Iterable[Check]) -> Dict[str, Any]:
    return {
        "tool_version": __version__,
        "lie_type": lie_type,
        "command": command,
        "results": to_jsonable(results),
        "checks": checks_json(checks),
    }


def dumps(report: Dict[str, Any]) -> str:
    """Deterministic serialization; ``dumps(json.loads(dumps(r))) == dumps(r)``."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def strip_runtime(report: Any) -> Any:
    """A copy of a parsed report without ``runtime_ms`` fields, for determinism comparisons."""
    if isinstance(report, dict):
        return {key: strip_runtime(item) for key, item in report.items() if key != "runtime_ms"}
    if isinstance(report, list):
        return [strip_runtime(item) for item in report]
    return report
