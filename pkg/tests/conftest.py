"""Shared test helpers: a session-wide category cache and the quiver corpus.

Building a ClusterCategory knits the full module region and installs the
orbit structure, which is cheap but not free; tests share instances through
get_category so the suite stays well under the time budget.
"""

from __future__ import annotations

import random

from clustertilt.category import ClusterCategory

# linear orientations 1 -> 2 -> ... -> n
LINEAR = {
    1: "1",
    2: "1->2",
    3: "1->2 2->3",
    4: "1->2 2->3 3->4",
    5: "1->2 2->3 3->4 4->5",
}

D4 = "1->2 2->3 2->4"
D5 = "1->2 2->3 3->4 3->5"
E6 = "1->2 2->3 3->4 4->5 3->6"
E7 = "1->2 2->3 3->4 4->5 5->6 3->7"
E8 = "1->2 2->3 3->4 4->5 5->6 6->7 3->8"

SEED = 20240815

_cache: dict[str, ClusterCategory] = {}


def get_category(text: str) -> ClusterCategory:
    if text not in _cache:
        _cache[text] = ClusterCategory(text)
    return _cache[text]


def rng() -> random.Random:
    return random.Random(SEED)


def a_orientations(n: int) -> list[str]:
    """All 2^(n-1) orientations of the path 1 - 2 - ... - n."""
    if n == 1:
        return ["1"]
    out = []
    for bits in range(2 ** (n - 1)):
        arrows = []
        for i in range(1, n):
            if bits & (1 << (i - 1)):
                arrows.append(f"{i + 1}->{i}")
            else:
                arrows.append(f"{i}->{i + 1}")
        out.append(" ".join(arrows))
    return out


def d4_orientations() -> list[str]:
    """All 8 orientations of the D_4 star with center 2."""
    out = []
    for bits in range(8):
        arrows = []
        for i, leaf in enumerate((1, 3, 4)):
            if bits & (1 << i):
                arrows.append(f"{leaf}->2")
            else:
                arrows.append(f"2->{leaf}")
        out.append(" ".join(arrows))
    return out
