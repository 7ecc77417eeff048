"""Finite spaces, finite frames and lens hyperspaces, backed by the C++ core."""

import json

from . import _core
from ._core import CapacityError, InputError, InvariantViolation

__all__ = [
    "CapacityError",
    "InputError",
    "InvariantViolation",
    "certificate_check",
    "cn_quasi_lens",
    "duality",
    "examples",
    "hyperspace",
    "lattice_report",
    "run_suite",
    "space_report",
]


def _space(space):
    return space if isinstance(space, str) else json.dumps(space)


def space_report(space):
    """Property flags and broken laws for {"n": .., "opens"|"subbasis": ..}."""
    return json.loads(_core.space_report(_space(space)))


def hyperspace(space):
    return json.loads(_core.hyperspace(_space(space)))


def duality(space):
    return json.loads(_core.duality(_space(space)))


def lattice_report(lattice):
    """Frame, filter, temperance and way-below data for {"m": .., "leq": ..}."""
    return json.loads(_core.lattice_report(_space(lattice)))


def run_suite(seed=1, max_points=4, samples=1000, suites=("all",)):
    return json.loads(_core.run_suite(seed, max_points, samples, list(suites)))


def examples():
    return json.loads(_core.examples())


def certificate_check(certificate):
    return json.loads(_core.certificate_check(_space(certificate)))


def cn_quasi_lens(q, c):
    """q and c are ("finite" | "cofinite", [naturals]) pairs."""
    return _core.cn_quasi_lens(q[0] == "cofinite", list(q[1]), c[0] == "cofinite", list(c[1]))
