from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources

CONFIRMED = "confirmed"
COUNTEREXAMPLE = "counterexample"
INFEASIBLE = "infeasible"


@dataclass
class Report:
    theorem_id: str
    params: dict
    verdict: str
    extremal_rho: float | None = None
    family_rho: float | None = None
    argmax_graphs: list[str] = field(default_factory=list)
    family_graph: str | None = None
    counterexample: str | None = None
    class_size: int = 0
    elapsed_s: float = 0.0
    note: str = ""
    # (graph code, rho, connectivity value, minimum degree) per class member
    members: list[tuple] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": self.params,
            "verdict": self.verdict,
            "extremal_rho": self.extremal_rho,
            "family_rho": self.family_rho,
            "argmax_graphs": list(self.argmax_graphs),
            "family_graph": self.family_graph,
            "counterexample": self.counterexample,
            "class_size": self.class_size,
            "elapsed_s": self.elapsed_s,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def members_csv(self, connectivity_column: str = "kappa_l") -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph6", "rho", connectivity_column, "delta"])
        for code, rho, conn, delta in self.members:
            w.writerow([code, f"{rho:.10g}", conn, "" if delta is None else delta])
        return buf.getvalue()


def report_schema() -> dict:
    return json.loads(resources.files("lconn").joinpath("report.schema.json").read_text())
