import pytest

from clutterkit import suites


def test_froberg_suite_small():
    report = suites.froberg_suite(4)
    assert report["ok"]
    assert report["chordal_count"] == 61
    assert report["closure_sets_equal"]
    assert report["greedy_failures"] == 0


def test_froberg_suite_parallel_matches_serial():
    serial = suites.froberg_suite(4)
    parallel = suites.froberg_suite(4, jobs=2)
    assert serial == parallel


def test_connectivity_suite_small():
    report = suites.connectivity_suite(4)
    assert report["ok"] and report["checked"] == 2 + 8 + 64


def test_clutter_erasure_suite_tiny():
    report = suites.clutter_erasure_suite(4, 3)
    assert report["ok"]
    assert report["closure_sets_equal"]


def test_free_face_suite_small():
    report = suites.free_face_suite(4, 2)
    assert report["ok"] and report["circuits_checked"] > 0
    report = suites.free_face_suite(4, 3)
    assert report["ok"]


def test_chromatic_suite_small():
    report = suites.chromatic_suite(5)
    assert report["ok"] and report["checked"] == 2 + 8 + 61 + 822


def test_chromatic_suite_parallel_matches_serial():
    assert suites.chromatic_suite(5) == suites.chromatic_suite(5, jobs=2)


def test_boundary_suite_small():
    report = suites.boundary_suite(5)
    assert report["ok"] and report["checked"] == 2 + 8 + 61 + 822


def test_mst_suite_deterministic():
    a = suites.mst_suite(40, 7, seed=11)
    b = suites.mst_suite(40, 7, seed=11)
    assert a == b and a["ok"]


def test_skeleton_suite():
    report = suites.skeleton_extendability_suite(5)
    assert report["ok"] and report["partial_shellings_checked"] == 822


def test_probe_reports_are_observations():
    simon = suites.probe_simon(4, 2)
    assert simon["counterexamples"] == [] and simon["states_checked"] == 61
    ridge = suites.probe_ridge_chordal(4, 2)
    assert ridge["counterexamples"] == []


def test_multiset_invariance_suite():
    report = suites.multiset_invariance_suite(4, 2)
    assert report["ok"] and report["targets"] == 61
    with pytest.raises(ValueError, match="size guard"):
        suites.multiset_invariance_suite(5, 2)
