"""Machine checks for the structural claims behind the 16-input sorters.

The approximate-sorting prefix pins down a lot more than the cube order
itself; the checks here confirm each of the distributional claims the
constructions rely on, exhaustively over all 2**16 binary inputs and,
as a sanity cross-check, over seeded random permutations:

a) the extreme wires already hold the extreme values;
b) the 2nd/3rd largest values sit on layer III, the 2nd/3rd smallest on
   layer I;
c) the six medial values fall inside the 8-wire candidate set M;
d) the 4th/5th largest are the 3rd largest of layer III and the maximum of
   M (dually at the bottom).

Also here: the cube-order check itself, the partial orders established on
M by each construction's preliminary comparisons, the strategy-completeness
check (any 8-sorter on the M wires completes the network), and the depth
regression for the merge ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constructions import (
    CUBE_LAYER1,
    CUBE_LAYER3,
    LOWER_TETRAD,
    M_WIRES,
    MIDDLE_LAYER,
    UPPER_TETRAD,
    batcher_sorter,
    green16,
    green16_naive_merge,
    hypercube_phase,
    strategy_sorter,
    van_voorhis16,
)
from .network import Network, Phase, depth
from .verify import infer_poset, verify_sorts_binary

EXHAUSTIVE = "exhaustive-binary"
SAMPLED = "sampled-permutations"
DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0xC0FFEE

CLAIM_NAMES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class ClaimVerdict:
    holds: bool
    counterexample: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ObservationReport:
    """Verdicts for claims a-d under one checking mode."""

    mode: str
    inputs_checked: int
    seed: int | None
    claims: dict[str, ClaimVerdict]

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.claims.values())

    def to_lines(self) -> list[str]:
        seed = "-" if self.seed is None else hex(self.seed)
        lines = [f"observations mode={self.mode} inputs={self.inputs_checked} seed={seed}"]
        for name in CLAIM_NAMES:
            verdict = self.claims[name]
            if verdict.holds:
                lines.append(f"{name}: holds")
            else:
                bits = " ".join(str(x) for x in verdict.counterexample)
                lines.append(f"{name}: FAIL input=[{bits}]")
        return lines


def check_cube_poset(net: Network, n: int) -> bool:
    """Does the network order its wires exactly into the n-cube order?"""
    width = 1 << n
    if net.width != width:
        raise ValueError(f"expected width {width} for n={n}, got {net.width}")
    poset = infer_poset(net)
    return all(
        poset.leq(a, b) == ((a & b) == a) for a in range(width) for b in range(width)
    )


def _apply_columns(mat: np.ndarray, net: Network) -> None:
    for c in net.comparators:
        a = mat[:, c.low].copy()
        b = mat[:, c.high]
        np.minimum(a, b, out=mat[:, c.low])
        np.maximum(a, b, out=mat[:, c.high])


def _all_binary_inputs(width: int) -> np.ndarray:
    v = np.arange(1 << width, dtype=np.uint32)
    out = np.empty((1 << width, width), dtype=np.uint8)
    for i in range(width):
        out[:, i] = (v >> (width - 1 - i)) & 1
    return out


def _permutation_inputs(width: int, samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    base = np.tile(np.arange(width, dtype=np.int64), (samples, 1))
    return rng.permuted(base, axis=1)


def _sorted_multiset_contains(small: np.ndarray, big: np.ndarray) -> np.ndarray:
    """Row-wise multiset inclusion of sorted ``small`` rows in sorted ``big``
    rows, where big has exactly two extra columns.

    An inclusion is an order-preserving embedding small[j] == big[j + d_j]
    with offsets d_j non-decreasing in {0, 1, 2}; feasible offsets are
    tracked column by column.
    """
    n, k = small.shape
    if big.shape != (n, k + 2):
        raise ValueError("big must have exactly two more columns than small")
    feasible = [small[:, 0] == big[:, d] for d in range(3)]
    for j in range(1, k):
        reach = feasible[0]
        nxt = []
        for d in range(3):
            if d > 0:
                reach = reach | feasible[d]
            nxt.append((small[:, j] == big[:, j + d]) & reach)
        feasible = nxt
    return feasible[0] | feasible[1] | feasible[2]


def _sorted_pair_equals(
    s_lo: np.ndarray, s_hi: np.ndarray, x: np.ndarray, y: np.ndarray
) -> np.ndarray:
    return (np.minimum(x, y) == s_lo) & (np.maximum(x, y) == s_hi)


def _claim_masks(outputs: np.ndarray) -> dict[str, np.ndarray]:
    ranks = np.sort(outputs, axis=1)
    layer1 = np.sort(outputs[:, list(CUBE_LAYER1)], axis=1)
    layer3 = np.sort(outputs[:, list(CUBE_LAYER3)], axis=1)
    m_vals = np.concatenate(
        [outputs[:, list(MIDDLE_LAYER)], layer3[:, :1], layer1[:, 3:]], axis=1
    )
    m_vals = np.sort(m_vals, axis=1)

    a = (outputs[:, 15] == ranks[:, 15]) & (outputs[:, 0] == ranks[:, 0])
    b = (
        (layer3[:, 3] == ranks[:, 14])
        & (layer3[:, 2] == ranks[:, 13])
        & (layer1[:, 0] == ranks[:, 1])
        & (layer1[:, 1] == ranks[:, 2])
    )
    c = _sorted_multiset_contains(ranks[:, 5:11], m_vals)
    d = _sorted_pair_equals(
        ranks[:, 11], ranks[:, 12], layer3[:, 1], m_vals[:, 7]
    ) & _sorted_pair_equals(ranks[:, 3], ranks[:, 4], layer1[:, 2], m_vals[:, 0])
    return {"a": a, "b": b, "c": c, "d": d}


def check_observations(
    prefix: Network | None = None,
    *,
    mode: str = EXHAUSTIVE,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> ObservationReport:
    """Check claims a-d for a width-16 prefix network.

    ``mode=EXHAUSTIVE`` sweeps all binary inputs (authoritative);
    ``mode=SAMPLED`` spot-checks seeded random permutations.
    """
    if prefix is None:
        prefix = hypercube_phase(4)
    if prefix.width != 16:
        raise ValueError("observation checks are defined for width 16")
    if mode == EXHAUSTIVE:
        inputs = _all_binary_inputs(16)
        used_seed = None
    elif mode == SAMPLED:
        inputs = _permutation_inputs(16, samples, seed)
        used_seed = seed
    else:
        raise ValueError(f"unknown mode {mode!r}")
    outputs = inputs.copy()
    _apply_columns(outputs, prefix)
    masks = _claim_masks(outputs)
    claims = {}
    for name in CLAIM_NAMES:
        ok = masks[name]
        if bool(ok.all()):
            claims[name] = ClaimVerdict(True)
        else:
            first = int(np.flatnonzero(~ok)[0])
            claims[name] = ClaimVerdict(False, tuple(int(x) for x in inputs[first]))
    return ObservationReport(mode, len(inputs), used_seed, claims)


def _dominates(poset, upper: int) -> int:
    return sum(poset.leq(low, upper) for low in LOWER_TETRAD)


def _dominated_by(poset, lower: int) -> int:
    return sum(poset.leq(lower, up) for up in UPPER_TETRAD)


def check_green_m_poset(prefix: Network | None = None) -> bool:
    """Partial order on M after Green's tetrad sorts.

    Every sorted upper-tetrad wire must beat at least two lower-tetrad
    wires (wire 9, the second-smallest of the upper chain, at least three),
    every lower wire must lose to at least two upper wires, and in
    consequence wires 12, 10 must be the determined top two of M and wires
    3, 5 the bottom two.
    """
    if prefix is None:
        prefix = green16().prefix_through(Phase.TETRAD_B)
    poset = infer_poset(prefix)
    if not all(_dominates(poset, u) >= 2 for u in UPPER_TETRAD):
        return False
    if _dominates(poset, 9) < 3:
        return False
    if not all(_dominated_by(poset, low) >= 2 for low in LOWER_TETRAD):
        return False
    top_two = all(poset.leq(w, 12) for w in M_WIRES if w != 12) and all(
        poset.leq(w, 10) for w in M_WIRES if w not in (10, 12)
    )
    bottom_two = all(poset.leq(3, w) for w in M_WIRES if w != 3) and all(
        poset.leq(5, w) for w in M_WIRES if w not in (3, 5)
    )
    return top_two and bottom_two


def check_vv_m_poset(prefix: Network | None = None) -> bool:
    """Partial order on M after van Voorhis's second pair round: every
    upper-tetrad wire beats at least three lower-tetrad wires and vice
    versa, which pins the top three of M to the upper tetrad, the bottom
    three to the lower, and leaves (7, 8) as the medial pair."""
    if prefix is None:
        prefix = van_voorhis16().prefix_through(Phase.PAIRS2)
    poset = infer_poset(prefix)
    return all(_dominates(poset, u) >= 3 for u in UPPER_TETRAD) and all(
        _dominated_by(poset, low) >= 3 for low in LOWER_TETRAD
    )


def check_strategy_completeness(m_sorter: Network | None = None) -> bool:
    """Cube phase + layer sorters + any M sorter + final pair = full sorter."""
    if m_sorter is None:
        m_sorter = batcher_sorter(8)
    return verify_sorts_binary(strategy_sorter(m_sorter)).sorts


def check_depth_regression() -> bool:
    """Leading the Green merge with (7, 8) saves at least one layer."""
    return depth(green16()) == 10 and depth(green16_naive_merge()) >= 11
