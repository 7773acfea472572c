"""Typed electrical-network model and case-file ingestion.

A grid is a connected undirected graph of buses joined by branches (lines
and transformers), each carrying a series impedance and a thermal rating.
Case files are JSON::

    {
      "base_mva": 100.0,
      "buses":    [{"id": 0, "name": "1", "is_slack": true}, ...],
      "branches": [{"from": 0, "to": 1, "r_pu": 0.01, "x_pu": 0.05,
                    "rating_mw": 100.0, "kind": "line"}, ...]
    }

Loading re-indexes bus ids to the dense range ``0..n-1`` (ascending original
id) and merges parallel branches: admittances add, ratings add.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import CaseFileError, ValidationError

BRANCH_KINDS = ("line", "transformer")


@dataclass(frozen=True)
class Bus:
    id: int
    name: str
    is_slack: bool = False


@dataclass(frozen=True)
class Branch:
    from_bus: int
    to_bus: int
    resistance_pu: float
    reactance_pu: float
    rating_mw: float
    kind: str = "line"

    @property
    def impedance(self) -> complex:
        return complex(self.resistance_pu, self.reactance_pu)


@dataclass(frozen=True)
class Grid:
    buses: tuple[Bus, ...]
    branches: tuple[Branch, ...]
    base_mva: float = 100.0

    @property
    def n_buses(self) -> int:
        return len(self.buses)

    @property
    def n_branches(self) -> int:
        return len(self.branches)

    @property
    def slack_bus(self) -> int:
        for bus in self.buses:
            if bus.is_slack:
                return bus.id
        raise ValidationError("no slack bus")


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise CaseFileError(f"missing key '{key}' in {where}")
    return obj[key]


def _merge_parallel(branches: list[Branch]) -> list[Branch]:
    """Collapse parallel branches of one bus pair into a single equivalent.

    Admittances add (series impedances combine in parallel) and ratings add;
    a pair that mixes kinds is labelled a transformer.
    """
    groups: dict[tuple[int, int], list[Branch]] = {}
    order: list[tuple[int, int]] = []
    for br in branches:
        key = (min(br.from_bus, br.to_bus), max(br.from_bus, br.to_bus))
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(br)
    merged = []
    for key in order:
        group = groups[key]
        if len(group) == 1:
            merged.append(group[0])
            continue
        y_total = sum(1.0 / br.impedance for br in group)
        z_eq = 1.0 / y_total
        merged.append(Branch(
            from_bus=key[0],
            to_bus=key[1],
            resistance_pu=z_eq.real,
            reactance_pu=z_eq.imag,
            rating_mw=sum(br.rating_mw for br in group),
            kind="transformer" if any(br.kind == "transformer" for br in group)
                 else "line",
        ))
    return merged


def _connected(n: int, branches) -> bool:
    if n == 0:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for br in branches:
        adj[br.from_bus].append(br.to_bus)
        adj[br.to_bus].append(br.from_bus)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    return all(seen)


def validate(grid: Grid) -> list[str]:
    """Return human-readable invariant violations; empty list means valid."""
    problems = []
    n = grid.n_buses
    ids = [bus.id for bus in grid.buses]
    if ids != list(range(n)):
        problems.append("bus ids are not the dense range 0..n-1")
    slack_count = sum(bus.is_slack for bus in grid.buses)
    if slack_count == 0:
        problems.append("no slack bus")
    elif slack_count > 1:
        problems.append("multiple slack buses")
    if grid.base_mva <= 0:
        problems.append("base_mva must be positive")
    seen_pairs = set()
    for br in grid.branches:
        label = f"({br.from_bus},{br.to_bus})"
        if not (0 <= br.from_bus < n and 0 <= br.to_bus < n):
            problems.append(f"branch {label} references an unknown bus")
            continue
        if br.from_bus == br.to_bus:
            problems.append(f"branch {label} connects a bus to itself")
        if abs(br.impedance) == 0.0:
            problems.append(f"zero impedance on branch {label}")
        if br.rating_mw <= 0:
            problems.append(f"nonpositive rating on branch {label}")
        if br.kind not in BRANCH_KINDS:
            problems.append(f"unknown kind '{br.kind}' on branch {label}")
        pair = (min(br.from_bus, br.to_bus), max(br.from_bus, br.to_bus))
        if pair in seen_pairs:
            problems.append(f"duplicate branch pair {label}")
        seen_pairs.add(pair)
    if not problems and not _connected(n, grid.branches):
        problems.append("grid is disconnected")
    return problems


def build_grid(buses: list[Bus], branches: list[Branch],
               base_mva: float = 100.0) -> Grid:
    """Re-index buses densely, merge parallel branches, and validate."""
    old_ids = sorted(bus.id for bus in buses)
    if len(set(old_ids)) != len(old_ids):
        raise ValidationError("duplicate bus ids")
    remap = {old: new for new, old in enumerate(old_ids)}
    new_buses = tuple(
        Bus(id=remap[bus.id], name=bus.name, is_slack=bus.is_slack)
        for bus in sorted(buses, key=lambda b: b.id)
    )
    for br in branches:
        if br.from_bus not in remap or br.to_bus not in remap:
            raise ValidationError(
                f"branch ({br.from_bus},{br.to_bus}) references an unknown bus")
    remapped = [
        Branch(remap[br.from_bus], remap[br.to_bus], br.resistance_pu,
               br.reactance_pu, br.rating_mw, br.kind)
        for br in branches
    ]
    grid = Grid(buses=new_buses, branches=tuple(_merge_parallel(remapped)),
                base_mva=base_mva)
    problems = validate(grid)
    if problems:
        raise ValidationError("; ".join(problems))
    return grid


def load_grid(path: str | Path) -> Grid:
    """Load, merge, re-index, and validate a JSON case file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CaseFileError(f"cannot read case file {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CaseFileError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise CaseFileError(f"case file {path} must hold a JSON object")
    base_mva = _require(raw, "base_mva", "case file")
    if not isinstance(base_mva, (int, float)) or isinstance(base_mva, bool):
        raise CaseFileError("base_mva must be a number")
    buses = []
    for i, entry in enumerate(_require(raw, "buses", "case file")):
        if not isinstance(entry, dict):
            raise CaseFileError(f"bus #{i} is not an object")
        bus_id = _require(entry, "id", f"bus #{i}")
        if not isinstance(bus_id, int) or isinstance(bus_id, bool):
            raise CaseFileError(f"bus #{i} id must be an integer")
        buses.append(Bus(
            id=bus_id,
            name=str(_require(entry, "name", f"bus #{i}")),
            is_slack=bool(entry.get("is_slack", False)),
        ))
    branches = []
    for i, entry in enumerate(_require(raw, "branches", "case file")):
        if not isinstance(entry, dict):
            raise CaseFileError(f"branch #{i} is not an object")
        where = f"branch #{i}"
        kind = entry.get("kind", "line")
        if kind not in BRANCH_KINDS:
            raise CaseFileError(f"{where} kind must be one of {BRANCH_KINDS}")
        try:
            branches.append(Branch(
                from_bus=int(_require(entry, "from", where)),
                to_bus=int(_require(entry, "to", where)),
                resistance_pu=float(_require(entry, "r_pu", where)),
                reactance_pu=float(_require(entry, "x_pu", where)),
                rating_mw=float(_require(entry, "rating_mw", where)),
                kind=kind,
            ))
        except (TypeError, ValueError) as exc:
            raise CaseFileError(f"{where}: {exc}") from exc
    return build_grid(buses, branches, base_mva=float(base_mva))
