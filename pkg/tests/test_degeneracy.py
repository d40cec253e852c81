import pytest

from prefgeo.core.enums import NormTag
from prefgeo.core.exceptions import DuplicateCandidates, NoStrictGap
from prefgeo.core.geometry import detect_degeneracies, distance_key, perturb_generic
from prefgeo.core.models import Point2
from prefgeo.core.profiles import ranking_at


def test_l1_maximal_embedding_is_generic(l1_maximal):
    report = detect_degeneracies(l1_maximal.positions)
    assert report.is_empty()
    assert report.to_dict()["generic"] is True


def test_square_and_axis_pairs():
    report = detect_degeneracies([(0, 0), (2, 2), (5, 1), (5, 7)])
    assert (0, 1) in report.square_pairs
    assert (2, 3) in report.axis_pairs
    assert not report.is_empty()


def test_square_pairs_are_harmless_under_l2():
    report = detect_degeneracies([(0, 0), (2, 2), (5, 1)], norm=NormTag.L2)
    assert not report.square_pairs
    assert not report.axis_pairs


def test_linf_checks_the_rotated_frame():
    # (0,0) and (2,0) unrotate to (0,0) and (1,-1)
    report = detect_degeneracies([(0, 0), (2, 0)], norm=NormTag.LINF)
    assert report.square_pairs == frozenset({(0, 1)})


def test_unperturbed_hypercube_has_voter_ties():
    corners = [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    report = detect_degeneracies(corners, voters=[(-x, -y) for x, y in corners])
    assert report.voter_ties


def test_infinite_overlap_is_reported():
    # two pairs sharing the midline x = 1
    report = detect_degeneracies([(0, 0), (2, 0), (0, 5), (2, 5)], norm=NormTag.L2)
    assert ((0, 1), (2, 3)) in report.infinite_pairs


def test_duplicate_candidates_rejected():
    with pytest.raises(DuplicateCandidates):
        detect_degeneracies([(1, 1), (1, 1)])


def test_perturb_square_pair_keeps_voter_preference():
    voter = Point2(0, -1)
    fixed = perturb_generic([(0, 0), (2, 2)], voters=[voter])
    assert fixed == (Point2(1, 0), Point2(2, 2))
    assert detect_degeneracies(fixed, voters=[voter]).is_empty()
    assert ranking_at(fixed, NormTag.L1, voter) == (0, 1)


def test_perturb_leaves_generic_input_unchanged(l1_maximal):
    assert perturb_generic(l1_maximal.positions) == l1_maximal.positions


def test_perturb_needs_a_strict_gap():
    with pytest.raises(NoStrictGap):
        perturb_generic([(0, 0), (2, 0)], voters=[(1, 5)])


@pytest.mark.parametrize("norm", list(NormTag))
def test_perturbation_is_sound(norm, rng):
    done = 0
    while done < 40:
        points = list({(rng.randint(0, 5), rng.randint(0, 5)) for _ in range(4)})
        if len(points) < 3:
            continue
        voters = [Point2(rng.randint(-2, 8), rng.randint(-2, 8)) for _ in range(5)]
        strict = []
        for v in voters:
            keys = [distance_key(norm, v, Point2.of(c)) for c in points]
            if len(set(keys)) == len(keys):
                strict.append(v)
        before = [ranking_at([Point2.of(c) for c in points], norm, v) for v in strict]

        fixed = perturb_generic(points, voters=strict, norm=norm)
        assert detect_degeneracies(fixed, voters=strict, norm=norm).is_empty()
        assert [ranking_at(fixed, norm, v) for v in strict] == before
        done += 1
