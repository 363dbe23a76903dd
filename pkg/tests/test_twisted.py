import pytest

from ybe import corpus
from ybe.enumerate import enumerate_square_free
from ybe.errors import NotAPartition, NotInvariant, PreconditionUnmet
from ybe.perm import orbits
from ybe.solution import iyb_group
from ybe.twisted import (
    check_cyclic_condition,
    check_cyclic_generators,
    check_full_cyclic_condition,
    check_gtu_pair,
    check_key2,
    check_theorem_cyclic1,
    find_gtu_decomposition,
    gtu_report,
)

X1 = tuple(range(1, 9))
X2 = tuple(range(9, 17))
X3 = tuple(range(17, 25))


def test_cyclic_condition(e24, s4):
    assert check_cyclic_condition(corpus.trivial(4))
    assert check_cyclic_condition(s4)
    assert check_cyclic_condition(e24)


def test_full_cyclic_condition(e24, s4):
    assert check_full_cyclic_condition(corpus.trivial(4))
    assert check_full_cyclic_condition(s4)
    assert check_full_cyclic_condition(e24)


def test_gtu_pair_trivial():
    assert check_gtu_pair(corpus.trivial(4), {1, 2}, {3, 4}, mode="squarefree")
    assert check_gtu_pair(corpus.trivial(4), {1, 2}, {3, 4}, mode="general")


def test_gtu_pair_s4(s4):
    assert check_gtu_pair(s4, {1, 2}, {3, 4}, mode="squarefree")
    assert check_gtu_pair(s4, {1, 2}, {3, 4}, mode="general")
    assert check_gtu_pair(s4, {3, 4}, {1, 2}, mode="squarefree")


def test_gtu_pair_rejects_bad_split(s4):
    with pytest.raises(NotAPartition):
        check_gtu_pair(s4, {1, 2}, {2, 3, 4})
    with pytest.raises(NotAPartition):
        check_gtu_pair(s4, set(), {1, 2, 3, 4})
    with pytest.raises(NotInvariant):
        check_gtu_pair(s4, {1, 3}, {2, 4})


def test_gtu_pair_e24_first_orbit(e24):
    verdict = check_gtu_pair(e24, X1, X2 + X3, mode="squarefree")
    assert not verdict
    w = verdict.witness
    # the failing condition compares maps indexed inside the first orbit,
    # restricted to the complement
    assert w["condition"] == 4
    k = w["moved_index"]
    assert e24.sigma[w["z"] - 1](w["y"]) == k
    x = w["point"]
    assert e24.sigma[k - 1](x) != e24.sigma[w["y"] - 1](x)


def test_gtu_pair_e24_second_orbit_matches_display(e24):
    # sigma_1(9) = 10 and sigma_9, sigma_10 differ on the complement
    verdict = check_gtu_pair(e24, X2, X1 + X3, mode="squarefree")
    assert not verdict
    w = verdict.witness
    assert w["condition"] == 4 and w["z"] == 1 and w["y"] == 9
    assert w["moved_index"] == 10
    assert e24.sigma[0](9) == 10
    assert e24.sigma[8].restricted_images(X1 + X3) != \
        e24.sigma[9].restricted_images(X1 + X3)


def test_gtu_pair_e24_third_orbit_matches_display(e24):
    # sigma_1(17) = 18 and sigma_17, sigma_18 differ on the complement
    verdict = check_gtu_pair(e24, X3, X1 + X2, mode="squarefree")
    assert not verdict
    w = verdict.witness
    assert w["condition"] == 4 and w["z"] == 1 and w["y"] == 17
    assert w["moved_index"] == 18
    assert e24.sigma[0](17) == 18
    assert e24.sigma[16].restricted_images(X1 + X2) != \
        e24.sigma[17].restricted_images(X1 + X2)


def test_e24_first_orbit_display_facts(e24):
    # sigma_17(1) = 3 and sigma_1, sigma_3 differ beyond the first orbit
    assert e24.sigma[16](1) == 3
    assert e24.sigma[0].restricted_images(X2 + X3) != \
        e24.sigma[2].restricted_images(X2 + X3)


def test_e24_fails_every_ordered_split(e24):
    report = gtu_report(e24)
    assert not report["decomposable"]
    assert report["mode"] == "squarefree"
    fails = report["witness"]["failures"]
    assert len(fails) == 6  # ordered orbit-union splits of three orbits
    for entry in fails:
        assert entry["witness"] is not None


def test_find_gtu_s4(s4):
    assert find_gtu_decomposition(s4) == ((1, 2), (3, 4))


def test_find_gtu_trivial():
    assert find_gtu_decomposition(corpus.trivial(4)) == ((1,), (2, 3, 4))


def test_find_gtu_e24_none(e24):
    assert find_gtu_decomposition(e24) is None


def test_find_gtu_needs_two_points():
    with pytest.raises(PreconditionUnmet):
        find_gtu_decomposition(corpus.trivial(1))


def test_gtu_mode_equivalence_on_small_solutions():
    # on square-free solutions the general conditions agree with the
    # square-free ones for every ordered orbit-union split
    for n in range(2, 5):
        for s in enumerate_square_free(n, up_to_iso=True):
            orbs = orbits(iyb_group(s)).classes()
            import itertools
            for r in range(1, len(orbs)):
                for sub in itertools.combinations(range(len(orbs)), r):
                    y = tuple(sorted(x for i in sub for x in orbs[i]))
                    z = tuple(sorted(set(range(1, n + 1)) - set(y)))
                    a = bool(check_gtu_pair(s, y, z, mode="general"))
                    b = bool(check_gtu_pair(s, y, z, mode="squarefree"))
                    assert a == b


def test_decomposition_always_passes_check(s4):
    for s in (corpus.trivial(4), s4):
        y, z = find_gtu_decomposition(s)
        assert check_gtu_pair(s, y, z,
                              mode="squarefree" if s.square_free else "general")


def test_cyclic_generators(e24, s4):
    assert check_cyclic_generators(corpus.trivial(5))
    assert check_cyclic_generators(s4)
    assert not check_cyclic_generators(e24)


def test_key2(s4):
    assert check_key2(corpus.trivial(3))
    assert check_key2(s4)


def test_key2_preconditions(e24):
    with pytest.raises(PreconditionUnmet):
        check_key2(e24)  # generators are not single cycles


def test_theorem_cyclic1(s4):
    assert check_theorem_cyclic1(corpus.trivial(4))
    assert check_theorem_cyclic1(s4)


def test_theorem_cyclic1_preconditions(e24):
    with pytest.raises(PreconditionUnmet):
        check_theorem_cyclic1(e24)
