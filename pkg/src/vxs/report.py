"""Structured pass/fail reports and the shared boundedness detectors.

A Report is an ordered list of named rows, each carrying a computed value, an
optional bound it was checked against, and a pass flag (None = informational).
Reports serialize to canonical JSON; the determinism digest is a sha256 over
that JSON with the wallTime field removed, so repeat runs with equal inputs
produce equal digests.
"""

import hashlib
import json
from dataclasses import dataclass, field

# Unbounded detector thresholds: a value sequence indexed by a shrinking grid
# is flagged unbounded when its sup exceeds DETECT_THRESHOLD and the last
# three values each grow by at least DETECT_GROWTH.
DETECT_THRESHOLD = 1.0e3
DETECT_GROWTH = 1.5

# Slow-growth trend (for modular families that grow too slowly to trip the
# detector on short grids): last TREND_WINDOW values strictly increasing and
# total growth across the window at least TREND_FACTOR.
TREND_WINDOW = 4
TREND_FACTOR = 1.25


def unbounded_detector(values, threshold=DETECT_THRESHOLD, growth=DETECT_GROWTH):
    """True when the sequence looks unbounded along its grid.

    Requires sup > threshold and the last three values increasing by factors
    >= growth.  Any infinity counts as unbounded outright.
    """
    vals = [float(v) for v in values]
    if any(v != v for v in vals):
        return True
    if any(v == float("inf") for v in vals):
        return True
    if len(vals) < 3:
        return False
    if max(vals) <= threshold:
        return False
    a, b, c = vals[-3], vals[-2], vals[-1]
    return b >= growth * a and c >= growth * b


def looks_unbounded(values, threshold=DETECT_THRESHOLD, growth=DETECT_GROWTH):
    """Detector OR a sup beyond the threshold: the verdict used by the
    grid-supremum condition checks, whose inputs are O(1)-normalized."""
    vals = [float(v) for v in values]
    if not vals:
        return False
    if unbounded_detector(vals, threshold, growth):
        return True
    return max(vals) > threshold


def growing_trend(values, window=TREND_WINDOW, factor=TREND_FACTOR):
    """True when the tail of the sequence is strictly increasing with total
    growth >= factor across the last `window` values."""
    vals = [float(v) for v in values]
    if any(v != v or v == float("inf") for v in vals):
        return True
    if len(vals) < window:
        return False
    tail = vals[-window:]
    for a, b in zip(tail, tail[1:]):
        if b <= a:
            return False
    return tail[0] > 0 and tail[-1] / tail[0] >= factor


@dataclass
class Row:
    """One named check or measurement inside a Report."""

    name: str
    value: float
    bound: float | None = None
    passed: bool | None = None
    note: str = ""

    def to_dict(self):
        d = {"name": self.name, "value": self.value}
        if self.bound is not None:
            d["bound"] = self.bound
        if self.passed is not None:
            d["passed"] = self.passed
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    """Ordered collection of rows plus run metadata."""

    command: str
    rows: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def add(self, name, value, bound=None, passed=None, note=""):
        row = Row(name, float(value), None if bound is None else float(bound),
                  None if passed is None else bool(passed), note)
        self.rows.append(row)
        return row

    def warn(self, message):
        if message not in self.warnings:
            self.warnings.append(message)

    def extend(self, other):
        """Append another report's rows/warnings, prefixing row names."""
        for row in other.rows:
            self.rows.append(Row("%s/%s" % (other.command, row.name),
                                 row.value, row.bound, row.passed, row.note))
        for w in other.warnings:
            self.warn("%s: %s" % (other.command, w))

    @property
    def passed(self):
        return all(r.passed is not False for r in self.rows)

    @property
    def nonconvergent(self):
        return any("no convergence" in w for w in self.warnings)

    def to_dict(self, include_wall_time=True):
        d = {
            "command": self.command,
            "rows": [r.to_dict() for r in self.rows],
            "warnings": list(self.warnings),
            "meta": self.meta,
            "passed": self.passed,
        }
        if include_wall_time:
            d["wallTime"] = self.wall_time
        return d

    def to_json(self, include_wall_time=True):
        return json.dumps(self.to_dict(include_wall_time), sort_keys=True, indent=2)

    def digest(self):
        """sha256 over the canonical JSON with the volatile fields removed.

        wallTime and rows measuring wall-clock runtime vary run to run; the
        digest drops them so equal inputs give equal digests.
        """
        d = self.to_dict(include_wall_time=False)
        d["rows"] = [r for r in d["rows"]
                     if not r["name"].endswith("runtimeSeconds")]
        blob = json.dumps(d, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()
