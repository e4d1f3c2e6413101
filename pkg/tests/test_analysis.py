import random

import numpy as np
import pytest

from sortnet16 import (
    LOWER_TETRAD,
    M_WIRES,
    Network,
    Phase,
    UPPER_TETRAD,
    check_cube_poset,
    check_depth_regression,
    check_green_m_poset,
    check_observations,
    check_strategy_completeness,
    check_vv_m_poset,
    hypercube_phase,
    infer_poset,
)
from sortnet16.analysis import EXHAUSTIVE, SAMPLED, _sorted_multiset_contains

# Hasse diagrams of the partial order established on the M wires, as
# recovered by exhaustive order inference (documented here: the pictures
# the constructions rely on are exactly these).
GREEN_M_HASSE = [
    (3, 5), (5, 6), (5, 7), (6, 8), (6, 9),
    (7, 9), (8, 10), (9, 10), (10, 12),
]
VV_M_HASSE = [
    (3, 7), (3, 9), (3, 12),
    (5, 7), (5, 10), (5, 12),
    (6, 7), (6, 9), (6, 10),
    (8, 9), (8, 10), (8, 12),
]


def random_depth4_prefix(rng):
    """Four rounds of random perfect matchings on 16 wires."""
    comps = []
    for _ in range(4):
        wires = list(range(16))
        rng.shuffle(wires)
        for i in range(0, 16, 2):
            a, b = wires[i], wires[i + 1]
            comps.append((min(a, b), max(a, b)))
    return Network(16, tuple(comps))


def test_check_cube_poset_accepts_hypercube():
    assert check_cube_poset(hypercube_phase(4), 4)


def test_check_cube_poset_rejects_antichain():
    assert not check_cube_poset(Network(4), 2)


def test_check_cube_poset_rejects_truncated_phase():
    truncated = hypercube_phase(3).prefix(8)
    assert not check_cube_poset(truncated, 3)


def test_check_cube_poset_width_mismatch():
    with pytest.raises(ValueError):
        check_cube_poset(Network(4), 3)


def test_observations_hold_exhaustively():
    report = check_observations()
    assert report.mode == EXHAUSTIVE
    assert report.inputs_checked == 65536
    assert report.all_hold
    assert report.seed is None


def test_observations_hold_on_sampled_permutations():
    report = check_observations(mode=SAMPLED, samples=10_000, seed=0xC0FFEE)
    assert report.mode == SAMPLED
    assert report.inputs_checked == 10_000
    assert report.all_hold
    assert report.seed == 0xC0FFEE


def test_observations_sampled_mode_is_deterministic():
    first = check_observations(mode=SAMPLED, samples=500, seed=42)
    second = check_observations(mode=SAMPLED, samples=500, seed=42)
    assert first == second


def test_observations_fail_on_identity_prefix():
    report = check_observations(Network(16))
    assert not report.claims["b"].holds
    bad = report.claims["b"].counterexample
    assert bad is not None
    assert set(bad) <= {0, 1}
    assert not report.claims["a"].holds


def test_observations_reject_bad_inputs():
    with pytest.raises(ValueError):
        check_observations(Network(8))
    with pytest.raises(ValueError):
        check_observations(mode="guess")


def test_observation_report_lines():
    lines = check_observations(mode=SAMPLED, samples=100, seed=7).to_lines()
    assert lines[0].startswith("observations mode=sampled-permutations")
    assert "seed=0x7" in lines[0]
    assert lines[1:] == ["a: holds", "b: holds", "c: holds", "d: holds"]


def test_claim_a_restated_on_poset():
    poset = infer_poset(hypercube_phase(4))
    assert poset.above(15) == [15]
    assert poset.below(0) == [0]


def test_sampling_never_contradicts_exhaustive_mode():
    rng = random.Random(0xD4)
    for _ in range(20):
        prefix = random_depth4_prefix(rng)
        full = check_observations(prefix)
        sampled = check_observations(prefix, mode=SAMPLED, samples=1500, seed=99)
        for name, verdict in full.claims.items():
            if verdict.holds:
                assert sampled.claims[name].holds, name


def test_sorted_multiset_contains_against_brute_force():
    def contains(small, big):
        big = list(big)
        for x in small:
            if x not in big:
                return False
            big.remove(x)
        return True

    rng = random.Random(0x6)
    smalls, bigs, expected = [], [], []
    for _ in range(600):
        small = sorted(rng.choices(range(4), k=4))
        big = sorted(rng.choices(range(4), k=6))
        smalls.append(small)
        bigs.append(big)
        expected.append(contains(small, big))
    got = _sorted_multiset_contains(np.array(smalls), np.array(bigs))
    assert got.tolist() == expected


def test_green_m_poset_holds(green):
    assert check_green_m_poset()
    assert check_green_m_poset(green.prefix_through(Phase.TETRAD_B))


def test_green_m_poset_fails_before_tetrad_sorts(green):
    assert not check_green_m_poset(green.prefix_through(Phase.PAIRS))


def test_green_m_hasse_diagram(green):
    poset = infer_poset(green.prefix_through(Phase.TETRAD_B))
    assert poset.covers(M_WIRES) == sorted(GREEN_M_HASSE)
    # the documented dominance pattern behind the 3-comparison merge
    dominated = {u: sum(poset.leq(l, u) for l in LOWER_TETRAD) for u in UPPER_TETRAD}
    assert dominated == {7: 2, 9: 3, 10: 4, 12: 4}


def test_vv_m_poset_holds(vv):
    assert check_vv_m_poset()
    assert check_vv_m_poset(vv.prefix_through(Phase.PAIRS2))


def test_vv_m_poset_fails_on_green_prefix(green, vv):
    same_count = len(vv.prefix_through(Phase.PAIRS2))
    assert not check_vv_m_poset(green.prefix(same_count))


def test_vv_m_hasse_diagram(vv):
    poset = infer_poset(vv.prefix_through(Phase.PAIRS2))
    assert poset.covers(M_WIRES) == sorted(VV_M_HASSE)
    for upper in UPPER_TETRAD:
        assert sum(poset.leq(low, upper) for low in LOWER_TETRAD) == 3
    for low in LOWER_TETRAD:
        assert sum(poset.leq(low, upper) for upper in UPPER_TETRAD) == 3


def test_full_vv_m_wires_form_chain(vv):
    assert infer_poset(vv).is_total_chain(M_WIRES)


def test_strategy_completeness():
    assert check_strategy_completeness()


def test_depth_regression():
    assert check_depth_regression()
