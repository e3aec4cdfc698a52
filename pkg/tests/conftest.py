#!/usr/bin/env python3
"""Common pytest fixtures and test configuration."""
from __future__ import annotations

import os
import sys

import pytest

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

# pylint: disable=wrong-import-position,redefined-outer-name
from thetaspin.lib_e8_graded import E8Model  # noqa: E402
from thetaspin.lib_invariants import InvariantTheory  # noqa: E402
from thetaspin.lib_orbit_tools import OrbitTools  # noqa: E402
from thetaspin.lib_reflgroup import LittleWeylGroup  # noqa: E402
from thetaspin.lib_spinor import SpinorDictionary  # noqa: E402


@pytest.fixture(autouse=True)
def clear_thetaspin_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Remove thetaspin settings from the environment for every test."""

    for key in (
        "THETASPIN_LOG_LEVEL",
        "THETASPIN_SEED",
        "THETASPIN_METRICS_FILE",
    ):
        monkeypatch.delenv(key, raising=False)


@pytest.fixture(scope="session")
def model() -> E8Model:
    """The graded E8 model, built once."""

    return E8Model()


@pytest.fixture(scope="session")
def dictionary(model: E8Model) -> SpinorDictionary:
    """Labels of Delta+ (x) C^4 identified with g1."""

    return SpinorDictionary(model).build()


@pytest.fixture(scope="session")
def tools(model: E8Model, dictionary: SpinorDictionary) -> OrbitTools:
    return OrbitTools(model, dictionary)


@pytest.fixture(scope="session")
def group() -> LittleWeylGroup:
    """W0; the 46080 elements are enumerated on first use."""

    return LittleWeylGroup()


@pytest.fixture(scope="session")
def theory(group: LittleWeylGroup) -> InvariantTheory:
    """Invariant catalog without the Hessian invariant."""

    result = InvariantTheory(group)
    result.build_catalog(with_hessian=False)
    return result
