"""Plain-text rendering for the command line, built on pandas frames."""
from typing import Dict, Iterable, List, Sequence

import pandas as pd

from lie.kostant import Check, ConjectureReport, SaturationReport
from lie.reps import Decomposition
from lie.utils import IndexSet, format_rational, format_weight, report_order

from .report import index_set_label


def _frame_text(rows: List[dict]) -> str:
    if not rows:
        return "(empty)"
    return pd.DataFrame(rows).to_string(index=False)


def _matrix_text(matrix: Sequence[Sequence]) -> str:
    rows = [{str(j + 1): str(format_rational(x)) for j, x in enumerate(row)} for row in matrix]
    return pd.DataFrame(rows, index=[str(i + 1) for i in range(len(matrix))]).to_string()


def check_lines(checks: Iterable[Check]) -> str:
    lines = []
    for check in checks:
        mark = "✅" if check.passed else "❌"
        lines.append(f"{mark} {check.name}" + (f": {check.detail}" if check.detail else ""))
    return "\n".join(lines)


def summary_line(checks: Sequence[Check]) -> str:
    failed = sum(1 for c in checks if not c.passed)
    if failed:
        return f"❌ {failed} of {len(checks)} checks failed"
    return f"✅ all {len(checks)} checks passed"


def roots_text(title: str, cartan, cartan_inverse, symmetrizer, positive_roots, rho_root_coords) -> str:
    roots = _frame_text([{"#": n + 1, "root": format_weight(c), "height": sum(c)} for n, c in enumerate(positive_roots)])
    return "\n\n".join([
        f"📐 {title}",
        "Cartan matrix\n" + _matrix_text(cartan),
        "Inverse Cartan matrix\n" + _matrix_text(cartan_inverse),
        "Symmetrizer  " + format_weight(symmetrizer),
        f"Positive roots ({len(positive_roots)})\n" + roots,
        "rho in simple-root coordinates  " + format_weight(rho_root_coords),
    ])


def vertices_text(vertex_set: Dict[IndexSet, Sequence]) -> str:
    rows = [{"J": index_set_label(J), "vertex": format_weight(vertex_set[J])} for J in report_order(vertex_set)]
    return _frame_text(rows)


def decomposition_text(decomposition: Decomposition, dims: Dict) -> str:
    rows = [
        {"component": format_weight(lam), "multiplicity": c, "dim": dims[lam]}
        for lam, c in sorted(decomposition.items(), key=lambda item: (-dims[item[0]], item[0]))
    ]
    return _frame_text(rows)


def conjecture_text(report: ConjectureReport) -> str:
    rows = [
        {
            "lambda": format_weight(p.weight),
            "2rho - lambda": format_weight(p.root_gap),
            "multiplicity": p.multiplicity,
            "vertex": "yes" if p.is_vertex else "",
        }
        for p in report.points
    ]
    return f"🔎 {report.lie_type}: {len(rows)} lattice points of P(2rho)\n" + _frame_text(rows)


def saturation_text(report: SaturationReport) -> str:
    rows = [
        {"lambda": format_weight(p.weight), f"c^({report.d} lambda)": p.multiplicity, "N": p.certificate_n}
        for p in report.points
    ]
    return f"🔎 {report.lie_type}: saturation with d = {report.d}\n" + _frame_text(rows)
