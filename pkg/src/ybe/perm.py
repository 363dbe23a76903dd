"""Permutations of {1..n} and finitely generated permutation groups.

A permutation is stored as an image table: ``images[j-1]`` is where point
``j`` goes.  All points are 1-indexed, matching the usual x_1..x_n labelling
of the ground set.  Groups hold their generators and materialize the full
element set on demand via breadth-first closure (desk scale only; there is
deliberately no stabilizer-chain machinery here).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, DegreeMismatch, IndexOutOfRange

DEFAULT_ELEMENT_CAP = 1_000_000


@dataclass(frozen=True)
class Perm:
    """A bijection of {1..n} as an image table.

    >>> p = Perm((2, 1, 3))
    >>> p(1), p(2), p(3)
    (2, 1, 3)
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images {self.images!r} are not a bijection of 1..{n}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Perm:
        """Build a permutation of {1..n} from disjoint cycles."""
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for x in cyc:
                if not 1 <= x <= n:
                    raise IndexOutOfRange(f"cycle point {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"point {x} appears in two cycles")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, j: int) -> int:
        if not 1 <= j <= len(self.images):
            raise IndexOutOfRange(f"point {j} outside 1..{len(self.images)}")
        return self.images[j - 1]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == j for j, img in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, sorted descending."""
        lengths = [len(c) for c in cycle_decomposition(self)]
        lengths += [1] * (len(self.images) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def restricted_images(self, points: Sequence[int]) -> tuple[int, ...]:
        """Images of the given points, in the given order."""
        return tuple(self.images[x - 1] for x in points)

    def __repr__(self) -> str:
        return f"Perm[{cycles_to_str(self)}]"


def compose(a: Perm, b: Perm) -> Perm:
    """Function composition: ``compose(a, b)`` sends j to a(b(j))."""
    if a.degree != b.degree:
        raise DegreeMismatch(f"cannot compose degree {a.degree} with degree {b.degree}")
    ai, bi = a.images, b.images
    return Perm(tuple(ai[bi[j] - 1] for j in range(len(ai))))


def inverse(a: Perm) -> Perm:
    return a.inverse()


def cycle_decomposition(a: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of length >= 2, each starting at its minimal point,
    ordered by minimal point.  The identity decomposes into no cycles."""
    n = a.degree
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = a(start)
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = a(x)
        if len(cyc) > 1:
            cycles.append(tuple(cyc))
    return cycles


def is_cyclic(a: Perm) -> bool:
    """True when the permutation is a single cycle.  The identity counts as
    cyclic (empty cycle), so trivial generators pass cyclic-generator tests."""
    return len(cycle_decomposition(a)) <= 1


def cycles_to_str(a: Perm) -> str:
    cycles = cycle_decomposition(a)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def perm_from_cycle_str(n: int, text: str) -> Perm:
    """Parse cycle notation like ``"(9,10)(11,12)"`` into a permutation of {1..n}.

    Separators inside a cycle may be commas or whitespace; ``"()"``, ``"id"``
    and the empty string all denote the identity.
    """
    text = text.strip()
    if text in ("", "id", "()"):
        return Perm.identity(n)
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise ValueError(f"unparsable cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(text):
        parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        if not parts:
            continue
        try:
            cycles.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"unparsable cycle notation: {text!r}") from None
    return Perm.from_cycles(n, cycles)


@dataclass(frozen=True)
class Partition:
    """A partition of {1..n}; ``class_of[j-1]`` is the class id of point j.

    Class ids are contiguous from 1 and numbered by order of minimal member,
    so two equal partitions always have identical labels.
    """

    n: int
    class_of: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.class_of) != self.n:
            raise ValueError("class assignment must cover 1..n")
        k = max(self.class_of)
        if sorted(set(self.class_of)) != list(range(1, k + 1)):
            raise ValueError("class ids must be contiguous from 1")
        firsts = []
        seen: set[int] = set()
        for c in self.class_of:
            if c not in seen:
                seen.add(c)
                firsts.append(c)
        if firsts != list(range(1, k + 1)):
            raise ValueError("classes must be numbered by minimal member")

    @classmethod
    def from_labels(cls, labels: Sequence) -> Partition:
        """Build from arbitrary per-point labels, renumbering canonically."""
        ids: dict = {}
        class_of = []
        for lab in labels:
            if lab not in ids:
                ids[lab] = len(ids) + 1
            class_of.append(ids[lab])
        return cls(len(labels), tuple(class_of))

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def single_class(cls, n: int) -> Partition:
        return cls(n, (1,) * n)

    @property
    def num_classes(self) -> int:
        return max(self.class_of)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes as sorted tuples, ordered by minimal element."""
        buckets: list[list[int]] = [[] for _ in range(self.num_classes)]
        for j, c in enumerate(self.class_of, start=1):
            buckets[c - 1].append(j)
        return tuple(tuple(b) for b in buckets)

    def representatives(self) -> tuple[int, ...]:
        """Minimal member of each class, in class order."""
        return tuple(c[0] for c in self.classes())

    def refine(self, other: Partition) -> Partition:
        """Common refinement: points share a class iff they do in both."""
        if other.n != self.n:
            raise DegreeMismatch("refining partitions of different ground sets")
        return Partition.from_labels(list(zip(self.class_of, other.class_of)))


class PermGroup:
    """A permutation group given by generators of one common degree.

    ``elements`` stays None until :func:`closure` materializes the full
    element set; everything else (orbits, abelianness) works straight from
    the generators.
    """

    def __init__(self, degree: int, generators: Iterable[Perm],
                 element_cap: int = DEFAULT_ELEMENT_CAP):
        gens = tuple(generators)
        if not gens:
            raise ValueError("a group needs at least one generator")
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator of degree {g.degree} in a group of degree {degree}")
        if element_cap < 1:
            raise ValueError("element_cap must be positive")
        self.degree = degree
        self.generators = gens
        self.element_cap = element_cap
        self._elements: frozenset[Perm] | None = None

    @property
    def elements(self) -> frozenset[Perm] | None:
        return self._elements

    def order(self) -> int:
        return len(closure(self).elements)

    def __repr__(self) -> str:
        size = "?" if self._elements is None else str(len(self._elements))
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)}, order={size})"


def closure(g: PermGroup) -> PermGroup:
    """Populate (and return) the group with its full element set.

    Breadth-first products of generators starting from the identity; in a
    finite group this is automatically closed under inverses.  Raises
    CapExceeded rather than silently truncating when the group is larger
    than ``g.element_cap``.
    """
    if g._elements is None:
        ident = Perm.identity(g.degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            new: list[Perm] = []
            for h in frontier:
                for a in g.generators:
                    p = compose(a, h)
                    if p not in seen:
                        if len(seen) + 1 > g.element_cap:
                            raise CapExceeded(
                                f"group closure exceeds cap {g.element_cap}")
                        seen.add(p)
                        new.append(p)
            frontier = new
        g._elements = frozenset(seen)
    return g


def orbits(g: PermGroup) -> Partition:
    """Orbit partition of {1..degree} under the group action."""
    n = g.degree
    label = [0] * (n + 1)
    next_label = 0
    for start in range(1, n + 1):
        if label[start]:
            continue
        next_label += 1
        label[start] = next_label
        queue = [start]
        while queue:
            x = queue.pop()
            for gen in g.generators:
                y = gen(x)
                if not label[y]:
                    label[y] = next_label
                    queue.append(y)
    return Partition.from_labels(label[1:])


def is_abelian(g: PermGroup) -> bool:
    """Generators pairwise commute, which settles the whole group."""
    gens = g.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if compose(a, b) != compose(b, a):
                return False
    return True


def are_conjugate(g: PermGroup, a: Perm, b: Perm) -> bool:
    """True when h a h^-1 = b for some h in the (materialized) group."""
    if a.degree != g.degree or b.degree != g.degree:
        raise DegreeMismatch("conjugacy test needs elements of the group's degree")
    if a == b:
        return True
    if a.cycle_type() != b.cycle_type():
        return False
    for h in closure(g).elements:
        if compose(compose(h, a), h.inverse()) == b:
            return True
    return False
