"""Report rows for verification runs and their CSV/JSON serializations."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field

from . import __version__

CSV_HEADER = (
    "graph_id", "provenance", "n", "m", "match", "ind_match", "s", "field_char",
    "reg_symbolic", "reg_ordinary", "formula_value", "status", "elapsed_ms",
)
TIMING_FIELDS = ("elapsed_ms",)


@dataclass
class ReportRow:
    graph_id: str
    provenance: str
    n: int
    m: int
    match: int
    ind_match: int
    s: int
    field_char: int
    reg_symbolic: int | None = None
    reg_ordinary: int | None = None
    status: str = "ok"
    elapsed_ms: int | None = 0
    details: dict = field(default_factory=dict)

    @property
    def formula_value(self) -> int:
        return 2 * self.s + self.ind_match - 1

    def sort_key(self):
        return (self.graph_id, self.s, self.field_char)

    def as_record(self, with_timing: bool = True) -> dict:
        rec = {k: getattr(self, k) for k in CSV_HEADER}
        if not with_timing:
            for k in TIMING_FIELDS:
                rec.pop(k)
        if self.details:
            rec["details"] = self.details
        return rec


@dataclass
class Check:
    """One named comparison inside a lemma or proof-trace verification."""

    name: str
    relation: str  # "==", "<=", ">=" or "ideal=="
    lhs: object
    rhs: object
    passed: bool
    note: str = ""


@dataclass
class CheckReport:
    graph_id: str
    s: int
    kind: str
    checks: list[Check] = field(default_factory=list)
    status: str = "ok"
    elapsed_ms: int | None = 0

    @property
    def passed(self) -> bool:
        return self.status == "ok"

    def finish(self):
        if not self.status.startswith("skipped"):
            self.status = "ok" if all(c.passed for c in self.checks) else "violated"
        return self

    def sort_key(self):
        return (self.graph_id, self.s, self.kind)

    def as_record(self, with_timing: bool = True) -> dict:
        rec = {
            "graph_id": self.graph_id, "s": self.s, "kind": self.kind, "status": self.status,
            "checks": [asdict(c) for c in self.checks],
        }
        if with_timing:
            rec["elapsed_ms"] = self.elapsed_ms
        return rec


CHECK_CSV_HEADER = ("graph_id", "s", "kind", "check", "relation", "lhs", "rhs", "passed", "note")


@dataclass
class VerificationReport:
    rows: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    timestamp: str = field(default_factory=lambda: time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()))

    def sorted_rows(self) -> list:
        return sorted(self.rows, key=lambda r: r.sort_key())

    def counts(self) -> dict[str, int]:
        out = {"ok": 0, "violated": 0, "skipped": 0}
        for r in self.rows:
            out["skipped" if r.status.startswith("skipped") else r.status] += 1
        return out

    def exit_code(self) -> int:
        c = self.counts()
        if c["violated"]:
            return 1
        if self.rows and c["skipped"] == len(self.rows):
            return 3
        return 0

    def canonical(self) -> list[dict]:
        """Rows without timing fields in canonical order; used for comparisons."""
        return [r.as_record(with_timing=False) for r in self.sorted_rows()]

    def to_json(self) -> str:
        doc = {
            "metadata": {"tool_version": __version__, "config": self.config, "timestamp": self.timestamp},
            "summary": self.counts(),
            "rows": [r.as_record() for r in self.rows],
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.rows and isinstance(self.rows[0], CheckReport):
            w.writerow(CHECK_CSV_HEADER)
            for r in self.rows:
                for c in r.checks:
                    w.writerow([r.graph_id, r.s, r.kind, c.name, c.relation, c.lhs, c.rhs, c.passed, c.note])
                if not r.checks:
                    w.writerow([r.graph_id, r.s, r.kind, r.status, "", "", "", "", ""])
            return buf.getvalue()
        w.writerow(CSV_HEADER)
        for r in self.rows:
            rec = r.as_record()
            w.writerow(["" if rec[k] is None else rec[k] for k in CSV_HEADER])
        return buf.getvalue()

    def render(self, fmt: str = "csv") -> str:
        return self.to_json() if fmt == "json" else self.to_csv()
