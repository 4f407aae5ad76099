import itertools

import pytest

from cgrank.config import Settings
from cgrank.cube import PointSet, Switching, switch_points
from cgrank.errors import PreconditionError
from cgrank.report import VerificationReport
from suites.corpus import (
    Instance,
    build_corpus,
    instance_name,
    orbit_representatives,
    permute_points,
    run_instances,
)


def test_orbit_counts():
    assert len(orbit_representatives(1)) == 3
    assert len(orbit_representatives(2)) == 6


def test_orbit_representatives_partition_all_subsets():
    n = 2
    seen = {}
    for rep in orbit_representatives(n):
        orbit = {
            permute_points(switch_points(rep, Switching(n, frozenset(flips))), perm).bitmask()
            for perm in itertools.permutations(range(n))
            for flips in itertools.chain.from_iterable(itertools.combinations(range(n), k) for k in range(n + 1))
        }
        assert rep.bitmask() == min(orbit)
        for mask in orbit:
            assert mask not in seen
            seen[mask] = rep
    assert len(seen) == 1 << (1 << n)


def test_permute_points():
    S = PointSet.from_points(2, [(1, 0)])
    assert permute_points(S, (1, 0)) == PointSet.from_points(2, [(0, 1)])
    with pytest.raises(PreconditionError):
        permute_points(S, (0, 0))


def test_build_corpus():
    exhaustive = build_corpus(2)
    assert len(exhaustive) == 5
    assert all(not inst.S.is_full() for inst in exhaustive)
    sampled = build_corpus(4, samples=3, seed=5, proper=False)
    assert len(sampled) == 3
    assert [i.S for i in sampled] == [i.S for i in build_corpus(4, samples=3, seed=5, proper=False)]


def test_instance_names_and_replay():
    S = PointSet.from_indices(2, [0, 3])
    assert instance_name(S) == "n2-9"
    assert Instance(instance_name(S), S).replay() == "n=2\n00\n11\n"


def _count(instance, settings):
    report = VerificationReport("count", instances=1)
    report.add("seen", instance.name, True)
    return report


def test_run_instances_preserves_order():
    instances = build_corpus(2)
    report = run_instances(_count, instances, VerificationReport("count"), Settings())
    assert report.instances == len(instances)
    assert [a.instance for a in report.assertions] == [i.name for i in instances]


def test_symmetry_reduction_limit():
    with pytest.raises(PreconditionError):
        orbit_representatives(5)
