"""Permutations, permutation groups from generators, and structure tests.

Points are 1-based: a permutation of degree n acts on {1..n}.  Composition is
left to right, so (p * q) sends i to q(p(i)), and orbit code applies
generators on the right throughout.

Group order uses a deterministic Schreier-Sims stabilizer chain whose base is
chosen as the smallest moved point at each level, so recomputation always
yields the same chain and the same transversal words.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceeded, DegreeMismatch, NotTransitiveError
from .partitions import SetPartition

MAX_DEGREE = 512

Images = tuple[int, ...]


def _identity_images(n: int) -> Images:
    return tuple(range(1, n + 1))


def _mult(p: Images, q: Images) -> Images:
    # left-to-right: result(i) = q(p(i))
    return tuple(q[x - 1] for x in p)


def _inv(p: Images) -> Images:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def _is_identity(p: Images) -> bool:
    return all(x == i + 1 for i, x in enumerate(p))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored as the tuple of images of 1, ..., n."""

    images: Images

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the supported cap {MAX_DEGREE}")
        if set(self.images) != set(range(1, n + 1)):
            raise ValueError("images must be a bijection of {1..n}")
        object.__setattr__(self, "images", tuple(self.images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(_identity_images(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        images = list(_identity_images(n))
        for cyc in cycles:
            pts = list(cyc)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if not 1 <= a <= n:
                    raise ValueError(f"point {a} outside 1..{n}")
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation like "(1,2,3)(4,5)"; "()" is the identity."""
        stripped = text.replace(" ", "")
        if not re.fullmatch(r"(\((\d+(,\d+)*)?\))+", stripped):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = [
            [int(x) for x in body.split(",")] if body else []
            for body in re.findall(r"\(([\d,]*)\)", stripped)
        ]
        n = max((max(c) for c in cycles if c), default=1)
        if degree is not None:
            if n > degree:
                raise ValueError(f"cycle point exceeds degree {degree}")
            n = degree
        return cls.from_cycles(n, [c for c in cycles if c])

    def apply(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return Permutation(_inv(self.images))

    def is_identity(self) -> bool:
        return _is_identity(self.images)

    def cycle_string(self) -> str:
        seen: set[int] = set()
        out = []
        for i in range(1, self.degree + 1):
            if i in seen or self.images[i - 1] == i:
                continue
            cyc = [i]
            j = self.images[i - 1]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            out.append("(" + ",".join(map(str, cyc)) + ")")
        return "".join(out) if out else "()"

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result maps i to q(p(i))."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} vs {q.degree}")
    return Permutation(_mult(p.images, q.images))


def invert(p: Permutation) -> Permutation:
    return p.inverse()


# ---------------------------------------------------------------------------
# Deterministic Schreier-Sims stabilizer chain


class _Level:
    __slots__ = ("base", "gens", "orbit")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Images] = []
        self.orbit: dict[int, Images] = {}


class _StabChain:
    """Stabilizer chain: level i holds generators fixing all shallower bases.

    A sift residue stopping at level j is registered at every level from the
    scan level + 1 down to j, which keeps each level's generator list inside
    the group generated by every shallower list.
    """

    def __init__(self, degree: int, gens: Sequence[Images]):
        self.degree = degree
        self.identity = _identity_images(degree)
        self.levels: list[_Level] = []
        todo = [g for g in dict.fromkeys(gens) if not _is_identity(g)]
        if todo:
            self._construct(todo)

    def _smallest_moved(self, g: Images) -> int:
        for i, x in enumerate(g):
            if x != i + 1:
                return i + 1
        raise AssertionError("identity has no moved point")

    def _rebuild_orbit(self, level: _Level) -> None:
        orbit = {level.base: self.identity}
        queue = deque([level.base])
        while queue:
            p = queue.popleft()
            u = orbit[p]
            for g in level.gens:
                q = g[p - 1]
                if q not in orbit:
                    orbit[q] = _mult(u, g)
                    queue.append(q)
        level.orbit = orbit

    def _strip(self, g: Images, start: int) -> tuple[Images, int]:
        h = g
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            img = h[level.base - 1]
            if img not in level.orbit:
                return h, i
            h = _mult(h, _inv(level.orbit[img]))
            if _is_identity(h):
                return h, i + 1
        return h, len(self.levels)

    def _insert(self, residue: Images, start: int, stop: int) -> None:
        if stop == len(self.levels):
            self.levels.append(_Level(self._smallest_moved(residue)))
        for lvl in range(start, stop + 1):
            level = self.levels[lvl]
            if residue not in level.gens:
                level.gens.append(residue)
                self._rebuild_orbit(level)

    def _scan_level(self, i: int) -> bool:
        """Sift level i's Schreier generators; True when all strip to identity."""
        level = self.levels[i]
        clean = True
        for p in list(level.orbit):
            u = level.orbit[p]
            for s in level.gens:
                sg = _mult(_mult(u, s), _inv(level.orbit[s[p - 1]]))
                if _is_identity(sg):
                    continue
                residue, stop = self._strip(sg, i + 1)
                if not _is_identity(residue):
                    self._insert(residue, i + 1, stop)
                    clean = False
        return clean

    def _construct(self, gens: list[Images]) -> None:
        base0 = min(self._smallest_moved(g) for g in gens)
        level0 = _Level(base0)
        level0.gens = list(gens)
        self.levels = [level0]
        self._rebuild_orbit(level0)
        dirty = {0}
        while dirty:
            i = min(dirty)
            dirty.discard(i)
            if i >= len(self.levels):
                continue
            if not self._scan_level(i):
                dirty.update(range(i, len(self.levels)))

    def order(self) -> int:
        out = 1
        for level in self.levels:
            out *= len(level.orbit)
        return out

    def base(self) -> tuple[int, ...]:
        return tuple(level.base for level in self.levels)

    def basic_orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(level.orbit) for level in self.levels)

    def contains(self, images: Images) -> bool:
        if len(images) != self.degree:
            return False
        residue, _ = self._strip(images, 0)
        return _is_identity(residue)


# ---------------------------------------------------------------------------
# Permutation groups


@dataclass(eq=False)
class PermGroup:
    """A permutation group of degree n given by generators.

    The order and stabilizer chain are computed lazily and cached; the group
    is treated as immutable after construction and is safe to share between
    threads for reads.
    """

    degree: int
    generators: tuple[Permutation, ...]
    name: str | None = None
    _chain: _StabChain | None = field(default=None, repr=False, compare=False)
    _cached_order: int | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator (use the identity)")
        if self.degree < 1 or self.degree > MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}")
        for g in self.generators:
            if g.degree != self.degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {self.degree}"
                )
        self.generators = tuple(self.generators)

    @classmethod
    def from_gens(
        cls, gens: Iterable[Permutation], name: str | None = None
    ) -> "PermGroup":
        gens = tuple(gens)
        if not gens:
            raise ValueError("need at least one generator")
        return cls(degree=gens[0].degree, generators=gens, name=name)

    @property
    def chain(self) -> _StabChain:
        if self._chain is None:
            self._chain = _StabChain(self.degree, [g.images for g in self.generators])
        return self._chain

    @property
    def order(self) -> int:
        if self._cached_order is None:
            self._cached_order = self.chain.order()
        return self._cached_order

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        return self.chain.contains(p.images)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def gen_images(self) -> list[Images]:
        return [g.images for g in self.generators]

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"


def group_order(G: PermGroup) -> int:
    """Exact group order via the deterministic stabilizer chain."""
    return G.order


def elements_bfs(G: PermGroup, cap: int = 10**6) -> set[Permutation]:
    """All group elements by closure BFS over the generators.

    Independent of the stabilizer chain; intended as a cross-check oracle for
    small groups.  Raises CapExceeded beyond `cap` elements.
    """
    gens = G.gen_images()
    start = _identity_images(G.degree)
    seen: set[Images] = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = _mult(p, g)
            if q not in seen:
                if len(seen) >= cap:
                    raise CapExceeded("element closure cap exceeded", len(seen))
                seen.add(q)
                queue.append(q)
    return {Permutation(p) for p in seen}


def orbits_on_points(G: PermGroup) -> list[tuple[int, ...]]:
    """The orbits of the group on points, each sorted, ordered by minimum."""
    gens = G.gen_images()
    unseen = set(range(1, G.degree + 1))
    orbits = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for g in gens:
                q = g[p - 1]
                if q not in orbit:
                    orbit.add(q)
                    queue.append(q)
        orbits.append(tuple(sorted(orbit)))
        unseen -= orbit
    return orbits


def is_transitive(G: PermGroup) -> bool:
    return len(orbits_on_points(G)) == 1


def transitivity_degree(G: PermGroup) -> int:
    """The largest t with the group t-transitive (0 when intransitive)."""
    if G.degree == 1:
        return 1
    if not is_transitive(G):
        return 0
    sizes = G.chain.basic_orbit_sizes()
    t = 0
    for i, size in enumerate(sizes):
        if size == G.degree - i:
            t += 1
        else:
            break
    if t == len(sizes) and G.degree - t == 1:
        # trivial point stabilizer with a single point left over: the group
        # is sharply (t+1)-transitive (e.g. the full symmetric group)
        t += 1
    return t


@dataclass(frozen=True)
class BlockSystem:
    """A nontrivial group-invariant partition into equal-size blocks."""

    blocks: SetPartition

    @property
    def block_size(self) -> int:
        return len(self.blocks.blocks[0])

    @property
    def num_blocks(self) -> int:
        return self.blocks.num_blocks


def _congruence_closure(G: PermGroup, beta: int) -> list[set[int]]:
    # Finest G-congruence identifying 1 and beta (Atkinson's algorithm).
    n = G.degree
    gens = G.gen_images()
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    stack = [(1, beta)]
    union(1, beta)
    while stack:
        a, b = stack.pop()
        for g in gens:
            ga, gb = g[a - 1], g[b - 1]
            if union(ga, gb):
                stack.append((ga, gb))
    classes: dict[int, set[int]] = {}
    for p in range(1, n + 1):
        classes.setdefault(find(p), set()).add(p)
    return list(classes.values())


def nontrivial_block_system(G: PermGroup) -> BlockSystem | None:
    """A minimal nontrivial block system, or None when the group is primitive.

    Requires a transitive group.  Merging {1, beta} under generator closure
    for every beta and keeping the system with the smallest blocks makes the
    output deterministic.
    """
    if not is_transitive(G):
        raise NotTransitiveError("primitivity is only defined for transitive groups")
    n = G.degree
    if n == 1:
        return None
    best: list[set[int]] | None = None
    for beta in range(2, n + 1):
        classes = _congruence_closure(G, beta)
        if len(classes) == 1:
            continue
        if best is None or len(classes) > len(best):
            best = classes
    if best is None:
        return None
    return BlockSystem(SetPartition.of(best))


def is_primitive(G: PermGroup) -> bool:
    """True iff the transitive group G has no nontrivial block system."""
    return nontrivial_block_system(G) is None


def block_system_is_valid(G: PermGroup, system: BlockSystem) -> bool:
    """Direct assertion of the invariant: generators permute the blocks."""
    blocks = [frozenset(b) for b in system.blocks.blocks]
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1 or G.degree % len(blocks) != 0:
        return False
    block_set = set(blocks)
    for g in G.generators:
        for b in blocks:
            image = frozenset(g.apply(p) for p in b)
            if image not in block_set:
                return False
    return True
