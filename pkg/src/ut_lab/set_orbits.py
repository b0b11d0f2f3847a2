"""Orbits of k-subsets under a group; k- and (i,j)-homogeneity deciders.

k-sets are sorted tuples of 1-based points.  Orbit BFS runs on bitmask
encodings (bit p-1 set iff point p is in the set) and canonicalizes back to
tuples at the boundary; orbit representatives are the lexicographically least
members, so results do not depend on generator order.
"""
from __future__ import annotations

import itertools
import math
import weakref
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded
from .perm_core import Images, PermGroup

DEFAULT_ORBIT_CAP = 10**7

KSet = tuple[int, ...]


def as_kset(points: Iterable[int], n: int | None = None) -> KSet:
    """Validate and canonicalize a set of points into a sorted tuple."""
    pts = tuple(sorted(points))
    if not pts:
        raise ValueError("a k-set must be nonempty")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in k-set")
    if pts[0] < 1:
        raise ValueError("points are 1-based")
    if n is not None and pts[-1] > n:
        raise ValueError(f"point {pts[-1]} exceeds degree {n}")
    return pts


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << (p - 1)
    return m


def kset_of_mask(mask: int) -> KSet:
    out = []
    p = 1
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return tuple(out)


def apply_mask(mask: int, images: Images) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << (images[low.bit_length() - 1] - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class KSetOrbit:
    """One orbit of k-sets: lex-least representative, members, and size."""

    representative: KSet
    members: frozenset[KSet]
    size: int
    masks: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.representative)

    def __contains__(self, item: Iterable[int]) -> bool:
        return tuple(sorted(item)) in self.members

    def __repr__(self) -> str:
        return f"<KSetOrbit rep={self.representative} size={self.size}>"


def _orbit_masks(
    gens: Sequence[Images], start_mask: int, cap: int
) -> dict[int, tuple[int, int]]:
    """BFS orbit of a set-mask; maps mask -> (parent mask, generator index).

    The start mask maps to (0, -1).  Raises CapExceeded past `cap` members.
    """
    seen: dict[int, tuple[int, int]] = {start_mask: (0, -1)}
    queue = deque([start_mask])
    while queue:
        m = queue.popleft()
        for gi, g in enumerate(gens):
            im = apply_mask(m, g)
            if im not in seen:
                if len(seen) >= cap:
                    raise CapExceeded("k-set orbit cap exceeded", len(seen))
                seen[im] = (m, gi)
                queue.append(im)
    return seen


def _orbit_from_masks(masks: Iterable[int]) -> KSetOrbit:
    members = frozenset(kset_of_mask(m) for m in masks)
    rep = min(members)
    return KSetOrbit(rep, members, len(members), frozenset(masks))


def orbit_of_set(
    G: PermGroup, S: Iterable[int], cap: int = DEFAULT_ORBIT_CAP
) -> KSetOrbit:
    """The orbit of the set S under G, as canonical k-sets."""
    pts = as_kset(S, G.degree)
    parents = _orbit_masks(G.gen_images(), mask_of(pts), cap)
    return _orbit_from_masks(parents.keys())


def trace_orbit_word(
    G: PermGroup, parents: dict[int, tuple[int, int]], target_mask: int
) -> "Images":
    """Recover a group element sending the BFS start set to `target_mask`."""
    gens = G.gen_images()
    word: list[int] = []
    m = target_mask
    while True:
        parent, gi = parents[m]
        if gi < 0:
            break
        word.append(gi)
        m = parent
    images = tuple(range(1, G.degree + 1))
    for gi in reversed(word):
        g = gens[gi]
        images = tuple(g[x - 1] for x in images)
    return images


_ORBIT_CACHE: "weakref.WeakKeyDictionary[PermGroup, dict[int, tuple[KSetOrbit, ...]]]"
_ORBIT_CACHE = weakref.WeakKeyDictionary()


def orbits_on_ksets(
    G: PermGroup, k: int, cap: int = DEFAULT_ORBIT_CAP
) -> tuple[KSetOrbit, ...]:
    """All orbits of k-sets, ordered by lex-least representative.

    Orbit sizes sum to C(n, k).  Results are memoized per group.
    """
    if not 1 <= k <= G.degree:
        raise ValueError(f"need 1 <= k <= degree, got k={k}")
    cache = _ORBIT_CACHE.setdefault(G, {})
    if k in cache:
        return cache[k]
    gens = G.gen_images()
    seen: set[int] = set()
    orbits: list[KSetOrbit] = []
    total = 0
    for combo in itertools.combinations(range(1, G.degree + 1), k):
        m = mask_of(combo)
        if m in seen:
            continue
        parents = _orbit_masks(gens, m, cap)
        if total + len(parents) > cap:
            raise CapExceeded("k-set orbit cap exceeded", total)
        seen.update(parents.keys())
        total += len(parents)
        orbits.append(_orbit_from_masks(parents.keys()))
    orbits.sort(key=lambda o: o.representative)
    result = tuple(orbits)
    cache[k] = result
    return result


def num_orbits_on_ksets(G: PermGroup, k: int, cap: int = DEFAULT_ORBIT_CAP) -> int:
    return len(orbits_on_ksets(G, k, cap))


def is_k_homogeneous(G: PermGroup, k: int, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """True iff G is transitive on k-subsets.

    For k > n/2 this is decided on the complements, which form a single orbit
    iff the k-sets do.
    """
    n = G.degree
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= degree, got k={k}")
    kk = min(k, n - k)
    if kk == 0:
        return True
    first = orbit_of_set(G, range(1, kk + 1), cap)
    return first.size == math.comb(n, kk)


def is_ij_homogeneous(
    G: PermGroup, i: int, j: int, cap: int = DEFAULT_ORBIT_CAP
) -> tuple[bool, tuple[KSet, KSet] | None]:
    """Decide (i,j)-homogeneity: every i-set maps into every j-set.

    Equivalent, by orbit invariance, to: every orbit of i-sets contains a
    subset of every j-set orbit representative.  On failure returns a witness
    pair (representative of a missing i-orbit, offending j-set).
    """
    n = G.degree
    if not 1 <= i <= j <= n:
        raise ValueError(f"need 1 <= i <= j <= n, got i={i}, j={j}, n={n}")
    i_orbits = orbits_on_ksets(G, i, cap)
    orbit_id: dict[int, int] = {}
    for idx, orb in enumerate(i_orbits):
        for m in orb.masks:
            orbit_id[m] = idx
    want = set(range(len(i_orbits)))
    gens = G.gen_images()
    seen: set[int] = set()
    for combo in itertools.combinations(range(1, n + 1), j):
        m = mask_of(combo)
        if m in seen:
            continue
        parents = _orbit_masks(gens, m, cap)
        seen.update(parents.keys())
        rep = min(kset_of_mask(x) for x in parents)
        got = {orbit_id[mask_of(sub)] for sub in itertools.combinations(rep, i)}
        missing = want - got
        if missing:
            bad = min(missing)
            return False, (i_orbits[bad].representative, rep)
    return True, None


def order_bound_pass(G: PermGroup, k: int) -> bool:
    """The necessary order bound |G| * k >= C(n, k), in exact integers."""
    if not 1 <= k <= G.degree:
        raise ValueError(f"need 1 <= k <= degree, got k={k}")
    return G.order * k >= math.comb(G.degree, k)
