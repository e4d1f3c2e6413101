"""The compiled kernels and the big-integer fallback must be bit-identical."""

import random

import pytest

from sortnet16 import _bitslice, green16, van_voorhis16
from sortnet16.verify import backend_name

_kernels = pytest.importorskip("sortnet16._kernels")

from test_network import random_network


def wire_lists(net):
    return [c.low for c in net.comparators], [c.high for c in net.comparators]


def test_active_backend_reported():
    assert backend_name() in ("compiled", "python")


@pytest.mark.parametrize("width", [1, 2, 3, 5, 6, 7, 8, 12, 16])
def test_backends_agree_on_empty_networks(width):
    assert _kernels.first_unsorted(width, [], []) == _bitslice.first_unsorted(
        width, [], []
    )
    assert _kernels.leq_masks(width, [], []) == _bitslice.leq_masks(width, [], [])


def test_backends_agree_on_random_networks():
    rng = random.Random(0xD1FF)
    for _ in range(150):
        net = random_network(rng, width=rng.randint(2, 13))
        lows, highs = wire_lists(net)
        assert _kernels.first_unsorted(net.width, lows, highs) == (
            _bitslice.first_unsorted(net.width, lows, highs)
        )
        assert _kernels.leq_masks(net.width, lows, highs) == (
            _bitslice.leq_masks(net.width, lows, highs)
        )


def test_backends_agree_on_the_classics():
    for net in (green16(), van_voorhis16()):
        lows, highs = wire_lists(net)
        assert _kernels.first_unsorted(16, lows, highs) == -1
        assert _kernels.leq_masks(16, lows, highs) == _bitslice.leq_masks(
            16, lows, highs
        )


def test_kernel_width_guard():
    with pytest.raises(ValueError):
        _kernels.first_unsorted(29, [], [])
