"""Small complexes shipped with the package, in the complex file format."""

from __future__ import annotations

from importlib import resources

from ..cli_io import parse_complex_text
from ..complex_core import SimplicialComplex


def names() -> list[str]:
    return sorted(
        p.name[:-4] for p in resources.files(__name__).iterdir() if p.name.endswith(".txt")
    )


def path(name: str):
    return resources.files(__name__) / f"{name}.txt"


def load(name: str) -> SimplicialComplex:
    return parse_complex_text(path(name).read_text(), f"{name}.txt")
