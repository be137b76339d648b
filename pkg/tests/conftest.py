from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from minspan.antichain import TOP, Antichain
from minspan.enumeration import enumerate_lattice
from minspan.intervals import Interval

settings.register_profile(
    "suite",
    settings(
        max_examples=120,
        deadline=None,
        derandomize=True,
        suppress_health_check=[HealthCheck.too_slow],
    ),
)
settings.load_profile("suite")

DATA_DIR = Path(__file__).parent / "data"


def ac(*pairs: tuple[int, int]) -> Antichain:
    """Shorthand: antichain from (left, right) pairs, normalized."""
    return Antichain.normalize([Interval(l, r) for l, r in pairs])


def interval_lists(min_pos: int = -24, max_pos: int = 40, max_len: int = 6, max_size: int = 8):
    return st.lists(
        st.tuples(st.integers(min_pos, max_pos), st.integers(0, max_len)),
        max_size=max_size,
    ).map(lambda pairs: [Interval(left, left + width) for left, width in pairs])


def antichains(allow_top: bool = False, **kwargs):
    base = interval_lists(**kwargs).map(Antichain.normalize)
    if allow_top:
        return st.one_of(base, st.just(TOP))
    return base


@pytest.fixture(scope="session")
def e3() -> list[Antichain]:
    return list(enumerate_lattice(3))


@pytest.fixture(scope="session")
def e4() -> list[Antichain]:
    return list(enumerate_lattice(4))


@pytest.fixture(scope="session")
def rhyme_text() -> str:
    return (DATA_DIR / "rhyme.txt").read_text(encoding="utf-8")
