"""Deterministic machine-readable reports for the CLI and the demos.

JSON output must be byte-stable across runs for identical inputs, so it
carries only deterministic content (timing appears in the human-readable
rendering only) with sorted keys and canonical set literals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .sets import SentenceSet
from .classify import AxiomReport, Verdict


@dataclass
class Report:
    command: str
    verdict: bool | None = None
    data: dict = field(default_factory=dict)
    timing_ms: float = 0.0

    def to_json(self) -> str:
        payload = {"command": self.command, "verdict": self.verdict, "data": self.data}
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.verdict is not None:
            lines.append(f"verdict: {str(self.verdict).lower()}")
        lines.extend(_text_lines(self.data, ""))
        lines.append(f"time-ms: {self.timing_ms:.1f}")
        return "\n".join(lines) + "\n"


def _text_lines(value, prefix: str) -> list[str]:
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)):
                lines.append(f"{prefix}{key}:")
                lines.extend(_text_lines(item, prefix + "  "))
            else:
                lines.append(f"{prefix}{key}: {item}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.extend(_text_lines(item, prefix + "  "))
            else:
                lines.append(f"{prefix}- {item}")
    else:
        lines.append(f"{prefix}{value}")
    return lines


def verdict_payload(verdict: Verdict, witness_names) -> dict:
    payload: dict = {"passed": verdict.passed, "conclusive": verdict.conclusive}
    if verdict.witness is not None:
        payload["witness"] = {
            name: _witness_item(item)
            for name, item in zip(witness_names, verdict.witness)
        }
    return payload


def _witness_item(item):
    if isinstance(item, SentenceSet):
        return item.literal()
    return item


def axiom_report_payload(report: AxiomReport) -> dict:
    payload = {
        "axiom-i": verdict_payload(report.axiom_i, ("set",)),
        "axiom-ii": verdict_payload(report.axiom_ii, ("smaller", "larger")),
        "axiom-iii": verdict_payload(report.axiom_iii, ("set", "element")),
        "axiomless": report.axiomless,
        "mode": report.mode_note,
    }
    if report.finitary_from_monotone is not None:
        payload["finitary-followed-from-i-ii"] = report.finitary_from_monotone
    return payload
