"""Single-file JSON persistence with atomic writes.

The portfolio file is the canonical JSON dump of :class:`Portfolio`: keys
sorted, two-space indent, one trailing newline. Serialization is therefore
byte-stable: identical portfolios produce identical files. Writes go to a
temp file in the same directory followed by an atomic rename, so a failed
save never damages the previous file.

``load`` distinguishes four failures: missing file, unparseable JSON, an
unrecognized schema version, and integrity violations (reported all at once
with JSON-pointer-style paths). Schema migrations hook in through
``MIGRATIONS`` keyed by source version; version 1 is current.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from collections.abc import Callable
from pathlib import Path
from typing import Annotated

from pydantic import Field, ValidationError

from .allocation import DEFAULT_ALLOCATION_TARGET, AllocationTarget
from .errors import (
    SchemaVersionError,
    StoreError,
    StoreIntegrityError,
    StoreNotFoundError,
    StoreParseError,
)
from .funnel import FunnelEvent, replay, reset_to_draft
from .model import DomainModel, Idea, McSemantics, ThresholdScore, Violation, validate_idea
from .roadmap import (
    DEFAULT_EFFORT_THRESHOLD,
    DEFAULT_IMPACT_THRESHOLD,
    DEFAULT_TOP_TIER_THRESHOLD,
)
from .scoring import DEFAULT_CIVPS_THRESHOLD

SCHEMA_VERSION = 1

# from-version -> in-place dict upgrade to from-version + 1
MIGRATIONS: dict[int, Callable[[dict], dict]] = {}


class McDefaults(DomainModel):
    """Fallbacks for simulation requests that omit n or semantics."""

    n: Annotated[int, Field(ge=1)] = 100_000
    semantics: McSemantics = McSemantics.RESIDUAL_INCIDENT


class PortfolioConfig(DomainModel):
    """Portfolio-wide thresholds and defaults."""

    civps_threshold: ThresholdScore = DEFAULT_CIVPS_THRESHOLD
    scoring_quorum: Annotated[int, Field(ge=1)] = 1
    effort_threshold: Annotated[int, Field(ge=1, le=9)] = DEFAULT_EFFORT_THRESHOLD
    impact_threshold: Annotated[int, Field(ge=1, le=9)] = DEFAULT_IMPACT_THRESHOLD
    top_tier_threshold: ThresholdScore = DEFAULT_TOP_TIER_THRESHOLD
    allocation_target: AllocationTarget = DEFAULT_ALLOCATION_TARGET
    mc_defaults: McDefaults = McDefaults()


class Portfolio(DomainModel):
    """Everything one portfolio file holds."""

    schema_version: Annotated[int, Field(ge=1)] = SCHEMA_VERSION
    currency_label: str = "units"
    config: PortfolioConfig = PortfolioConfig()
    ideas: tuple[Idea, ...] = ()
    events: dict[str, tuple[FunnelEvent, ...]] = {}


def empty_portfolio() -> Portfolio:
    return Portfolio()


def canonical_json(portfolio: Portfolio) -> str:
    data = portfolio.model_dump(mode="json")
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def integrity_violations(portfolio: Portfolio) -> list[Violation]:
    """Portfolio-level invariant check; empty list means consistent.

    Replay uses a scoring quorum of 1 (the mandated minimum) so that
    tightening the configured quorum later cannot invalidate histories that
    were legal when recorded.
    """
    violations: list[Violation] = []
    ids: dict[str, int] = {}
    for index, idea in enumerate(portfolio.ideas):
        violations.extend(validate_idea(idea, base_path=f"/ideas/{index}"))
        if idea.id in ids:
            violations.append(
                Violation(
                    path=f"/ideas/{index}/id",
                    message=f"duplicate idea id {idea.id!r} (first at index {ids[idea.id]})",
                )
            )
        else:
            ids[idea.id] = index

    for idea_id in portfolio.events:
        if idea_id not in ids:
            violations.append(
                Violation(
                    path=f"/events/{idea_id}",
                    message=f"events reference unknown idea {idea_id!r}",
                )
            )

    for idea_id, index in ids.items():
        idea = portfolio.ideas[index]
        history = portfolio.events.get(idea_id, ())
        try:
            replayed = replay(reset_to_draft(idea), history, quorum=1)
        except Exception as exc:  # noqa: BLE001 - any replay failure is a violation
            violations.append(
                Violation(
                    path=f"/events/{idea_id}",
                    message=f"event history is not replayable: {exc}",
                )
            )
            continue
        for field in ("stage", "category", "scorecards", "estimate"):
            if getattr(replayed, field) != getattr(idea, field):
                violations.append(
                    Violation(
                        path=f"/ideas/{index}/{field}",
                        message=(
                            f"stored {field} does not match the replayed event history"
                        ),
                    )
                )
    return violations


def _pydantic_violations(error: ValidationError) -> list[Violation]:
    out = []
    for err in error.errors():
        path = "/" + "/".join(str(piece) for piece in err["loc"])
        out.append(Violation(path=path, message=err["msg"]))
    return out


def load(path: str | Path) -> Portfolio:
    """Read and fully validate a portfolio file."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise StoreNotFoundError(f"portfolio file not found: {path}") from None
    except OSError as exc:
        raise StoreError(f"cannot read portfolio file {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise StoreParseError(f"portfolio file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise StoreParseError(f"portfolio file {path} must hold a JSON object")

    version = data.get("schema_version")
    if not isinstance(version, int) or version < 1 or version > SCHEMA_VERSION:
        raise SchemaVersionError(
            f"portfolio file {path} has unknown schema_version {version!r},"
            f" this build reads versions 1..{SCHEMA_VERSION}"
        )
    while version < SCHEMA_VERSION:
        data = MIGRATIONS[version](data)
        version = data["schema_version"]

    try:
        portfolio = Portfolio.model_validate(data)
    except ValidationError as exc:
        raise StoreIntegrityError(_pydantic_violations(exc)) from exc
    violations = integrity_violations(portfolio)
    if violations:
        raise StoreIntegrityError(violations)
    return portfolio


def save(portfolio: Portfolio, path: str | Path) -> None:
    """Atomically write a portfolio; the previous file survives any failure."""
    violations = integrity_violations(portfolio)
    if violations:
        raise StoreIntegrityError(violations)
    path = Path(path)
    payload = canonical_json(portfolio)
    fd, tmp_name = tempfile.mkstemp(
        prefix=path.name + ".", suffix=".tmp", dir=path.parent
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp_name, path)
    except OSError as exc:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise StoreError(f"failed to write portfolio file {path}: {exc}") from exc


class PortfolioStore:
    """Single-writer handle on one portfolio file.

    Reads hand out the current immutable snapshot without locking; all
    mutations run serialized under one lock and persist before the new
    snapshot becomes visible.
    """

    def __init__(self, path: str | Path, portfolio: Portfolio):
        self._path = Path(path)
        self._portfolio = portfolio
        self._lock = threading.Lock()

    @classmethod
    def open(cls, path: str | Path, *, create_if_missing: bool = False) -> "PortfolioStore":
        path = Path(path)
        try:
            portfolio = load(path)
        except StoreNotFoundError:
            if not create_if_missing:
                raise
            path.parent.mkdir(parents=True, exist_ok=True)
            portfolio = empty_portfolio()
            save(portfolio, path)
        return cls(path, portfolio)

    @property
    def path(self) -> Path:
        return self._path

    @property
    def snapshot(self) -> Portfolio:
        return self._portfolio

    def mutate(self, fn: Callable[[Portfolio], Portfolio]) -> Portfolio:
        """Apply ``fn`` to the current snapshot, persist, then publish."""
        with self._lock:
            updated = fn(self._portfolio)
            save(updated, self._path)
            self._portfolio = updated
            return updated
