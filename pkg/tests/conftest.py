"""Shared fixtures for the test suite."""

import random
from math import gcd
from pathlib import Path
from typing import Optional

import pytest

from lefschetz_audit.fibration import Factorization
from lefschetz_audit.signature import elliptic_factorization
from lefschetz_audit.surface import Curve

DATA_DIR = Path(__file__).parent / "data"


def separating_word(m: int, g: int = 2) -> Factorization:
    """m twists about one separating curve of side genus 1."""
    return Factorization(
        name=f"sep{m}",
        fiber_genus=g,
        base_genus=0,
        curves=(("c", Curve.separating(1)),),
        word=("c",) * m,
    )


def random_primitive(rng: random.Random, g: int, bound: int = 3) -> Curve:
    while True:
        coords = [rng.randint(-bound, bound) for _ in range(2 * g)]
        curve = Curve.nonseparating(coords)
        if gcd(*coords) == 1:
            return curve


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def e1() -> Factorization:
    return elliptic_factorization(1)


@pytest.fixture
def e2() -> Factorization:
    return elliptic_factorization(2)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


def write_document(tmp_path: Path, text: str, name: Optional[str] = "doc.lf") -> Path:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path
