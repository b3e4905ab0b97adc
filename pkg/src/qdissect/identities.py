"""The verification engine.

An IdentityEntry ties deferred series builders to one statement from the
registry and says how to check it: coefficientwise equality, residue
support, strict positivity, or a coefficientwise inequality between two
residue-count tables.  verify_identity runs one entry and produces a
VerificationReport; verify_all runs a whole registry (optionally
filtered by a glob pattern on ids) in registry order.

An equality entry may carry more than two builders: every series is
compared against the first, which is how chained equalities such as the
four-way rank-crank relations are represented under a single stable id.

Precision discipline: an entry passes only if the comparison window
actually reaches the requested precision.  A narrower window is reported
as an error, never as a pass.
"""

from __future__ import annotations

import fnmatch
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

from . import partitions
from .series import PrecisionError, Series, SeriesError

SeriesBuilder = Callable[[int], Series]

KINDS = ("equality", "support", "positivity", "inequality")


@dataclass(frozen=True)
class CountSelector:
    """One residue-count table: N(a,M;.) for ranks, C(a,M;.) for cranks."""

    stat: str
    a: int
    M: int

    def series(self, prec: int) -> Series:
        return partitions.residue_series(self.stat, self.a, self.M, prec)

    def label(self) -> str:
        letter = "N" if self.stat == "rank" else "C"
        return f"{letter}({self.a},{self.M};.)"


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    paper_label: str
    kind: str
    default_prec: int
    builders: Tuple[SeriesBuilder, ...] = ()
    # support kind
    support_t: int = 0
    support_allowed: frozenset = frozenset()
    # positivity kind
    positive_from: int = 1
    # inequality kind: lhs >= rhs on t*n+r for n >= threshold
    ineq_lhs: Optional[CountSelector] = None
    ineq_rhs: Optional[CountSelector] = None
    ineq_t: int = 1
    ineq_r: int = 0
    ineq_threshold: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.default_prec < 50:
            raise ValueError("default_prec must be at least 50")
        if self.kind == "equality" and len(self.builders) < 2:
            raise ValueError("equality entries need at least two builders")
        if self.kind in ("support", "positivity") and len(self.builders) != 1:
            raise ValueError(f"{self.kind} entries take exactly one builder")
        if self.kind == "inequality" and (
            self.ineq_lhs is None or self.ineq_rhs is None
        ):
            raise ValueError("inequality entries need both count selectors")


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    id: str
    paper_label: str
    status: str  # pass | fail | error
    verified_through: int
    first_mismatch: Optional[Mismatch] = None
    ms: int = 0
    notes: Tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        fm = None
        if self.first_mismatch is not None:
            fm = {
                "exponent": self.first_mismatch.exponent,
                "lhs": self.first_mismatch.lhs,
                "rhs": self.first_mismatch.rhs,
            }
        return {
            "id": self.id,
            "paper_label": self.paper_label,
            "status": self.status,
            "verified_through": self.verified_through,
            "first_mismatch": fm,
            "ms": self.ms,
        }


JSON_REPORT_SCHEMA = {
    "type": "object",
    "required": ["run", "results"],
    "properties": {
        "run": {
            "type": "object",
            "required": ["prec_default", "timestamp"],
            "properties": {
                "prec_default": {"type": "integer"},
                "timestamp": {"type": "string"},
            },
        },
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "id",
                    "paper_label",
                    "status",
                    "verified_through",
                    "first_mismatch",
                    "ms",
                ],
                "properties": {
                    "id": {"type": "string"},
                    "paper_label": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "error"]},
                    "verified_through": {"type": "integer"},
                    "first_mismatch": {
                        "type": ["object", "null"],
                        "required": ["exponent", "lhs", "rhs"],
                        "properties": {
                            "exponent": {"type": "integer"},
                            "lhs": {"type": "string"},
                            "rhs": {"type": "string"},
                        },
                    },
                    "ms": {"type": "integer"},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class CheckOutcome:
    ok: bool
    through: int
    exponent: Optional[int] = None
    lhs: object = None
    rhs: object = None
    notes: Tuple[str, ...] = ()


def support_check(series: Series, t: int, allowed) -> CheckOutcome:
    """Pass iff every nonzero coefficient sits in an allowed class mod t."""
    allowed = frozenset(allowed)
    if any(not 0 <= r < t for r in allowed):
        raise ValueError("allowed residues must lie in [0, t)")
    for e, c in series.nonzero_items():
        if e % t not in allowed:
            return CheckOutcome(False, series.prec, e, c, 0)
    return CheckOutcome(True, series.prec)


def positivity_check(series: Series, from_n: int, max_n: int) -> CheckOutcome:
    """Pass iff the coefficient is strictly positive for from_n <= n <= max_n."""
    for n in range(from_n, max_n + 1):
        c = series.coeff(n)
        if not c > 0:
            return CheckOutcome(False, max_n + 1, n, c, 0)
    return CheckOutcome(True, max_n + 1)


def inequality_check(
    lhs: CountSelector,
    rhs: CountSelector,
    t: int,
    r: int,
    threshold: int,
    max_n: int,
) -> CheckOutcome:
    """Pass iff lhs >= rhs at every argument t*n+r with threshold <= n <= max_n.

    Failures below the threshold are expected by the statements that use
    this check; they are reported as notes, not as failures.
    """
    prec = t * max_n + r + 1
    a = lhs.series(prec)
    b = rhs.series(prec)
    notes = []
    for n in range(0, threshold):
        x, y = a.coeff(t * n + r), b.coeff(t * n + r)
        if x < y:
            notes.append(
                f"below threshold: n={n} has {lhs.label()}={x} < {rhs.label()}={y}"
            )
    for n in range(threshold, max_n + 1):
        x, y = a.coeff(t * n + r), b.coeff(t * n + r)
        if x < y:
            return CheckOutcome(False, max_n + 1, n, x, y, tuple(notes))
    return CheckOutcome(True, max_n + 1, notes=tuple(notes))


def verify_identity(entry: IdentityEntry, prec: Optional[int] = None) -> VerificationReport:
    """Run one entry at the given precision (default: the entry's own)."""
    if prec is None:
        prec = entry.default_prec
    if prec < 10:
        raise ValueError("verification precision must be at least 10")
    start = time.perf_counter()

    def finish(status, through, mismatch=None, notes=()):
        ms = int((time.perf_counter() - start) * 1000)
        return VerificationReport(
            entry.id, entry.paper_label, status, through, mismatch, ms, tuple(notes)
        )

    try:
        if entry.kind == "equality":
            reference = entry.builders[0](prec)
            for other_builder in entry.builders[1:]:
                other = other_builder(prec)
                cmp = reference.compare(other)
                if not cmp.equal:
                    ring = reference.ring
                    return finish(
                        "fail",
                        cmp.exponent,
                        Mismatch(
                            cmp.exponent,
                            ring.coeff_to_text(cmp.lhs),
                            ring.coeff_to_text(cmp.rhs),
                        ),
                    )
                if cmp.verified_through < prec:
                    return finish(
                        "error",
                        cmp.verified_through,
                        notes=[
                            f"window ends at {cmp.verified_through}, "
                            f"requested {prec}"
                        ],
                    )
            return finish("pass", prec)

        if entry.kind == "support":
            series = entry.builders[0](prec)
            outcome = support_check(series, entry.support_t, entry.support_allowed)
        elif entry.kind == "positivity":
            series = entry.builders[0](prec)
            outcome = positivity_check(series, entry.positive_from, prec - 1)
        else:
            outcome = inequality_check(
                entry.ineq_lhs,
                entry.ineq_rhs,
                entry.ineq_t,
                entry.ineq_r,
                entry.ineq_threshold,
                prec - 1,
            )
        if outcome.ok:
            return finish("pass", outcome.through, notes=outcome.notes)
        return finish(
            "fail",
            outcome.exponent,
            Mismatch(outcome.exponent, str(outcome.lhs), str(outcome.rhs)),
            notes=outcome.notes,
        )
    except (SeriesError, PrecisionError, ValueError, ZeroDivisionError) as exc:
        return finish("error", 0, notes=[f"{type(exc).__name__}: {exc}"])


def verify_all(
    registry: Sequence[IdentityEntry],
    prec: Optional[int] = None,
    id_filter: Optional[str] = None,
) -> list:
    """Verify entries in registry order; reports come back in that order."""
    selected = [
        e
        for e in registry
        if id_filter is None or fnmatch.fnmatchcase(e.id, id_filter)
    ]
    return [verify_identity(e, prec) for e in selected]


def all_passed(reports: Sequence[VerificationReport]) -> bool:
    return all(r.status == "pass" for r in reports)


def report_json(
    reports: Sequence[VerificationReport],
    prec_default: int,
    timestamp: str,
) -> dict:
    return {
        "run": {"prec_default": prec_default, "timestamp": timestamp},
        "results": [r.to_json_obj() for r in reports],
    }


def report_text(reports: Sequence[VerificationReport]) -> str:
    lines = []
    for r in reports:
        line = f"{r.status.upper():5s} {r.id} [{r.paper_label}] through {r.verified_through}"
        if r.first_mismatch is not None:
            fm = r.first_mismatch
            line += f" mismatch at q^{fm.exponent}: {fm.lhs} != {fm.rhs}"
        lines.append(line)
        for note in r.notes:
            lines.append(f"      note: {note}")
    passed = sum(1 for r in reports if r.status == "pass")
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines)


def perturb_entry(entry: IdentityEntry, exponent: int, amount: int = 1) -> IdentityEntry:
    """Clone an entry with its last builder perturbed by amount*q^exponent.

    Fault-injection helper: a perturbed clone must fail at exactly the
    perturbed exponent while every untouched entry still passes.
    """
    if not entry.builders:
        raise ValueError("entry has no builders to perturb")

    last = entry.builders[-1]

    def perturbed(prec: int) -> Series:
        built = last(prec)
        bump = Series.monomial(built.ring, exponent, built.prec, built.ring.coerce(amount))
        return built + bump

    return IdentityEntry(
        id=entry.id,
        paper_label=entry.paper_label,
        kind=entry.kind,
        default_prec=entry.default_prec,
        builders=entry.builders[:-1] + (perturbed,),
        support_t=entry.support_t,
        support_allowed=entry.support_allowed,
        positive_from=entry.positive_from,
        ineq_lhs=entry.ineq_lhs,
        ineq_rhs=entry.ineq_rhs,
        ineq_t=entry.ineq_t,
        ineq_r=entry.ineq_r,
        ineq_threshold=entry.ineq_threshold,
    )
