import os
import sys
from functools import lru_cache

from hypothesis import HealthCheck, settings

from lefschetz.families import parse_family
from lefschetz.structure import p_subgroup_classes

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@lru_cache(maxsize=None)
def group(spec: str):
    return parse_family(spec)


@lru_cache(maxsize=None)
def table(spec: str, p: int):
    return p_subgroup_classes(group(spec), p)


# (family, prime) pairs used by the property suites
SMALL_CASES = [
    ("cyclic:2", 2), ("cyclic:4", 2), ("cyclic:8", 2), ("cyclic:9", 3), ("cyclic:3", 3),
    ("elementary_abelian:2,2", 2), ("elementary_abelian:3,2", 3), ("dihedral:8", 2),
    ("dihedral:16", 2), ("quaternion:8", 2), ("quaternion:16", 2), ("symmetric:3", 3),
    ("symmetric:3", 2), ("symmetric:4", 2), ("symmetric:4", 3), ("alternating:4", 2),
    ("alternating:4", 3), ("alternating:5", 2), ("alternating:6", 2), ("symmetric:5", 5),
    ("s2p_normalizer:3", 3), ("s2p_normalizer:3", 2), ("wreath_family:3,2", 3),
]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
