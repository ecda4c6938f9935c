"""Violation reports shared by all verification routines.

A check returns a tuple of :class:`Violation`; the empty tuple means
the property holds.  Witnesses are 1-based basis index tuples so they
line up with the file format and with how hand calculations are
usually written down.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: tuple = ()
    detail: str = ""

    def to_json(self) -> dict:
        out = {"rule": self.rule, "witness": list(self.witness)}
        if self.detail:
            out["detail"] = self.detail
        return out


Report = tuple[Violation, ...]


def summarize(report: Report) -> dict:
    """First witness in scan order plus the total count, as JSON data."""
    out = {"ok": not report, "failures": len(report)}
    if report:
        out["first"] = report[0].to_json()
    return out
