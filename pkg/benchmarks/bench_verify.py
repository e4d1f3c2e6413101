#!/usr/bin/env python3
"""Benchmark the bit-slice backends against each other.

Times exhaustive verification (``first_unsorted``) and order inference
(``leq_masks``) for the built-in 16-wide networks on both the compiled
kernels and the pure-Python big-integer fallback, and checks on the fly
that the two backends return identical results.

    python benchmarks/bench_verify.py [--repeat N] [--wide W] [--naive]

``--wide W`` adds a seeded random network on W wires (default off; try 20)
to show how the gap scales with slice size.  ``--naive`` also times the
per-vector verification mode for contrast.
"""

import argparse
import random
import time

from sortnet16 import _bitslice, batcher_sorter, green16, van_voorhis16, verify_sorts_binary
from sortnet16.network import Network

try:
    from sortnet16 import _kernels
except ImportError:
    _kernels = None


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def wire_lists(net):
    return [c.low for c in net.comparators], [c.high for c in net.comparators]


def random_wide_network(width, seed=0xBE7C):
    rng = random.Random(seed)
    comps = []
    for _ in range(12 * width):
        a, b = rng.sample(range(width), 2)
        comps.append((min(a, b), max(a, b)))
    return Network(width, tuple(comps))


def bench(name, net, repeat, naive):
    lows, highs = wire_lists(net)
    w = net.width
    rows = []
    pure_verify = best_of(repeat, lambda: _bitslice.first_unsorted(w, lows, highs))
    pure_poset = best_of(repeat, lambda: _bitslice.leq_masks(w, lows, highs))
    if _kernels is not None:
        fast_verify = best_of(repeat, lambda: _kernels.first_unsorted(w, lows, highs))
        fast_poset = best_of(repeat, lambda: _kernels.leq_masks(w, lows, highs))
        assert _kernels.first_unsorted(w, lows, highs) == _bitslice.first_unsorted(
            w, lows, highs
        )
        assert _kernels.leq_masks(w, lows, highs) == _bitslice.leq_masks(w, lows, highs)
        rows.append(
            (name, "verify", fast_verify, pure_verify, pure_verify / fast_verify)
        )
        rows.append((name, "poset", fast_poset, pure_poset, pure_poset / fast_poset))
    else:
        rows.append((name, "verify", None, pure_verify, None))
        rows.append((name, "poset", None, pure_poset, None))
    if naive and w <= 16:
        t = best_of(max(1, repeat // 5), lambda: verify_sorts_binary(net, mode="naive"))
        rows.append((name, "verify (naive)", None, t, None))
    return rows


def fmt(seconds):
    return "      -" if seconds is None else f"{seconds * 1e3:9.3f}"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=25)
    parser.add_argument("--wide", type=int, default=None)
    parser.add_argument("--naive", action="store_true")
    args = parser.parse_args()

    targets = [
        ("green16", green16()),
        ("van_voorhis16", van_voorhis16()),
        ("batcher16", batcher_sorter(16)),
    ]
    if args.wide:
        targets.append((f"random w={args.wide}", random_wide_network(args.wide)))

    if _kernels is None:
        print("compiled kernels unavailable; timing the pure backend only\n")
    header = f"{'network':16s} {'operation':15s} {'compiled ms':>11s} {'python ms':>11s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, net in targets:
        for row in bench(name, net, args.repeat, args.naive):
            net_name, op, fast, pure, ratio = row
            ratio_text = "     -" if ratio is None else f"{ratio:7.1f}x"
            print(f"{net_name:16s} {op:15s} {fmt(fast):>11s} {fmt(pure):>11s} {ratio_text:>8s}")


if __name__ == "__main__":
    main()
