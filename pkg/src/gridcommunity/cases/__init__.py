"""Packaged IEEE test cases (see tools/make_fixtures.py for provenance)."""
from importlib import resources
from pathlib import Path

CASE_NAMES = ("ieee14", "ieee33", "ieee118")


def case_path(name: str) -> Path:
    """Filesystem path of a packaged case ('ieee14', 'ieee33', 'ieee118')."""
    if name not in CASE_NAMES:
        raise KeyError(f"unknown case '{name}' (available: {CASE_NAMES})")
    return Path(str(resources.files(__package__) / f"{name}.json"))


def load_case(name: str):
    """Load a packaged case straight into a Grid."""
    from ..grid import load_grid
    return load_grid(case_path(name))
