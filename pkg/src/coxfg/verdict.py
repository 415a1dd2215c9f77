"""Finite-generation verdicts for Cox rings, with witnesses and cross-checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .config import SurfaceConfig, is_anticanonical, is_root
from .cones import check_extremal, effective_cone, effective_generators
from .curves import minus_one_curves_with_bound, minus_two_curves, passes_recognition, root_span_rank
from .errors import (CapacityError, InfiniteCaseError, NotFinitelyGeneratedError,
                     NotInfiniteCaseError, WindowExceededError)
from .lattice import DivisorClass, k_degree, self_int
from .weyl import classify_witness_case, infinitude_witness

STATUSES = ("FG", "NotFG", "Unknown")
THEOREMS = ("main", "main2", "criterion", "corollary_K2_positive", "corollary_delpezzo",
            "corollary_anticanonical_integral", "nagata")
TAGS = ("anticanonical", "K2_positive", "K2_zero", "K2_negative", "del_pezzo", "elliptic_pencil")

MIN_WITNESS = 25
DEFAULT_WITNESS = 100

RECOGNITION_NOTE = ("recognition rule: a (-1)-class counts as a curve iff it meets every "
                    "(-2)-curve nonnegatively")
RANK8_NOTE = ("rank-8 criterion: a cubic pencil whose effective roots span rank 8 is taken "
              "to carry finitely many (-1)-curves")


@dataclass(frozen=True)
class Verdict:
    status: str
    theorem: str | None
    witness: tuple[DivisorClass, ...] = ()
    explanation: str | None = None
    notes: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()
    root_span_rank: int | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.theorem is not None and self.theorem not in THEOREMS:
            raise ValueError(f"bad theorem tag {self.theorem!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "theorem": self.theorem,
            "witness": [str(c) for c in self.witness],
            "explanation": self.explanation,
            "notes": list(self.notes),
            "tags": list(self.tags),
            "root_span_rank": self.root_span_rank,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any], r: int) -> "Verdict":
        return cls(data["status"], data["theorem"],
                   tuple(DivisorClass.parse(s, r) for s in data["witness"]),
                   data["explanation"], tuple(data["notes"]), tuple(data["tags"]),
                   data["root_span_rank"])


def classify(config: SurfaceConfig) -> frozenset[str]:
    K2 = 9 - config.r
    tags = set()
    if is_anticanonical(config):
        tags.add("anticanonical")
    tags.add("K2_positive" if K2 > 0 else "K2_zero" if K2 == 0 else "K2_negative")
    if config.r <= 8 and config.general_position:
        tags.add("del_pezzo")
    if config.cubic_pencil:
        tags.add("elliptic_pencil")
    return frozenset(tags)


def _tags(config: SurfaceConfig) -> tuple[str, ...]:
    return tuple(sorted(classify(config)))


def decide(config: SurfaceConfig, witness_count: int = DEFAULT_WITNESS) -> Verdict:
    """Apply the waterfall: K^2 > 0, the r = 9 pencil, general position, anticanonical, else Unknown."""
    if witness_count < MIN_WITNESS:
        raise ValueError(f"witness_count must be at least {MIN_WITNESS}")
    r = config.r
    tags = _tags(config)
    K2 = 9 - r

    def unknown(why: str, notes=(), rank=None) -> Verdict:
        return Verdict("Unknown", None, (), why, tuple(notes), tags, rank)

    # (a) positive anticanonical degree
    if K2 > 0:
        gens = effective_generators(config)
        return Verdict("FG", "corollary_K2_positive", gens, None, (RECOGNITION_NOTE,), tags)

    # (b) nine points: elliptic pencil or general position
    if r == 9 and (config.cubic_pencil or config.general_position):
        try:
            rank = root_span_rank(config)
        except WindowExceededError as exc:
            return unknown(f"root closure did not finish: {exc}")
        if rank == 8:
            try:
                m1, bound = minus_one_curves_with_bound(config)
                gens = tuple(sorted(set(m1) | set(minus_two_curves(config)), key=lambda c: c.vector()))
            except InfiniteCaseError as exc:
                return unknown(f"(-1)-curve enumeration did not stabilize: {exc}",
                               (RANK8_NOTE, RECOGNITION_NOTE), rank)
            notes = (f"heuristic enumeration: (-1)-curve set stable from degree {bound // 2} "
                     f"to {bound}", RANK8_NOTE, RECOGNITION_NOTE)
            return Verdict("FG", "main2", gens, None, notes, tags, rank)
        wit = tuple(infinitude_witness(config, witness_count))
        return Verdict("NotFG", "main2", wit, None,
                       (f"effective roots span rank {rank} < 8", RANK8_NOTE, RECOGNITION_NOTE),
                       tags, rank)

    # (c) ten or more points in general position
    if r >= 10 and config.general_position:
        wit = tuple(infinitude_witness(config, witness_count))
        return Verdict("NotFG", "nagata", wit, None,
                       ("witness: Cremona reflections on the last nine points",), tags)

    # (d) anticanonical, K^2 <= 0
    if is_anticanonical(config):
        notes = (RECOGNITION_NOTE,)
        try:
            gens = effective_generators(config)
            return Verdict("FG", "main", gens, None, notes, tags)
        except (NotFinitelyGeneratedError, WindowExceededError):
            pass
        if classify_witness_case(config) != "none":
            try:
                wit = tuple(infinitude_witness(config, witness_count))
                return Verdict("NotFG", "main", wit, None, notes, tags)
            except (NotInfiniteCaseError, WindowExceededError):
                pass
        return unknown("neither a finite (-1)/(-2)-curve certificate nor an infinite family "
                       "was found", notes)

    # (e)
    return unknown("-K is not known to be effective and the points are not general; "
                   "no criterion applies")


# cross-check ------------------------------------------------------------------

@dataclass(frozen=True)
class CheckItem:
    name: str
    result: str     # pass | fail | skipped
    detail: str = ""

    def to_dict(self) -> dict[str, str]:
        return {"check": self.name, "result": self.result, "detail": self.detail}


@dataclass(frozen=True)
class CrossCheckReport:
    items: tuple[CheckItem, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(i.result != "fail" for i in self.items)

    def to_dict(self) -> list[dict[str, str]]:
        return [i.to_dict() for i in self.items]


def validate_witness(config: SurfaceConfig, witness) -> str | None:
    """None if the witness is a valid infinite-family sample, else the reason."""
    if len(witness) < MIN_WITNESS:
        return f"only {len(witness)} classes"
    if len(set(witness)) != len(witness):
        return "duplicate classes"
    curves2 = None if config.general_position else minus_two_curves(config)
    for c in witness:
        if self_int(c) != -1 or k_degree(c) != -1:
            return f"{c} is not a (-1)-class"
        if curves2 is not None and not passes_recognition(c, curves2):
            return f"{c} fails the recognition rule"
    return None


def validate_generators(config: SurfaceConfig, gens) -> str | None:
    """None if every generator is a (-1)-curve, a (-2)-curve or a low-rank extra."""
    if not gens:
        return "empty generator list"
    curves2 = minus_two_curves(config)
    for c in gens:
        if is_root(c):
            if c not in curves2:
                return f"root {c} is not a (-2)-curve"
        elif self_int(c) == -1 and k_degree(c) == -1:
            if not passes_recognition(c, curves2):
                return f"{c} fails the recognition rule"
        elif not (config.r <= 2 and self_int(c) >= 0):
            return f"{c} is neither a (-1)- nor a (-2)-curve"
    return None


def cross_check(config: SurfaceConfig, verdict: Verdict | None = None) -> CrossCheckReport:
    """Check the verdict against the cone computations and the witness rules."""
    if verdict is None:
        verdict = decide(config)
    items: list[CheckItem] = []
    if verdict.status == "FG":
        bad = validate_generators(config, verdict.witness)
        items.append(CheckItem("generators_valid", "fail" if bad else "pass", bad or ""))
        try:
            cone = effective_cone(config)
            n = len(cone.generators)
            items.append(CheckItem("effective_cone_finite", "pass" if n else "fail",
                                   f"{n} generators, {len(cone.extremal_rays)} extremal rays"))
        except NotFinitelyGeneratedError as exc:
            items.append(CheckItem("effective_cone_finite", "fail", str(exc)))
        try:
            rep = check_extremal(config)
            items.append(CheckItem("extremality", "fail" if rep.status == "not_extremal" else "pass",
                                   rep.status))
        except (CapacityError, NotFinitelyGeneratedError) as exc:
            items.append(CheckItem("extremality", "skipped", str(exc)))
        items.append(CheckItem("witness_valid", "skipped", "finite case"))
    elif verdict.status == "NotFG":
        items.append(CheckItem("generators_valid", "skipped", "infinite case"))
        items.append(CheckItem("effective_cone_finite", "skipped", "infinite case"))
        items.append(CheckItem("extremality", "skipped", "infinite case"))
        bad = validate_witness(config, verdict.witness)
        items.append(CheckItem("witness_valid", "fail" if bad else "pass",
                               bad or f"{len(verdict.witness)} distinct (-1)-curves"))
    return CrossCheckReport(tuple(items))


__all__ = ["Verdict", "classify", "decide", "cross_check", "CrossCheckReport", "CheckItem",
           "validate_witness", "validate_generators"]
