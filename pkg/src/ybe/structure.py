"""Structure-group arithmetic inside the semidirect product.

Elements are pairs (exponent vector, permutation): the vector lives in the
free abelian group on u_1..u_n and the permutation in the solution's group,
which acts by moving exponent slots: acting by p sends the exponent at slot
j to slot p(j), so e.g. p = (1,2,3) carries the vector (5,0,0) to (0,5,0).
Generator i is (e_i, sigma_i); products of generators realize the group
presented by x_i x_j = x_k x_l whenever r(i,j) = (k,l), and equality of
elements is plain componentwise equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import DegreeMismatch, IndexOutOfRange
from .perm import Perm, compose
from .solution import Solution, Verdict, r_apply


@dataclass(frozen=True)
class StructureElem:
    """A pair (exponent vector, permutation) of one common size."""

    vec: tuple[int, ...]
    perm: Perm

    def __post_init__(self):
        if len(self.vec) != self.perm.degree:
            raise DegreeMismatch(
                f"vector length {len(self.vec)} != permutation degree {self.perm.degree}")

    @property
    def n(self) -> int:
        return len(self.vec)

    @classmethod
    def identity(cls, n: int) -> StructureElem:
        return cls((0,) * n, Perm.identity(n))

    def is_identity(self) -> bool:
        return self.perm.is_identity() and all(x == 0 for x in self.vec)


@dataclass(frozen=True)
class Word:
    """A word in the generators: signed 1-based indices, +i for x_i and -i
    for its inverse."""

    letters: tuple[int, ...]

    def __post_init__(self):
        if any(x == 0 for x in self.letters):
            raise ValueError("word letters are signed non-zero indices")


def _act(p: Perm, v: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(v)
    for j, x in enumerate(v, start=1):
        out[p(j) - 1] = x
    return tuple(out)


def gen(s: Solution, i: int) -> StructureElem:
    """The i-th generator: standard basis vector plus the i-th sigma map."""
    if not 1 <= i <= s.n:
        raise IndexOutOfRange(f"generator index {i} outside 1..{s.n}")
    vec = tuple(1 if j == i else 0 for j in range(1, s.n + 1))
    return StructureElem(vec, s.sigma[i - 1])


def mul(x: StructureElem, y: StructureElem) -> StructureElem:
    """Semidirect product: (a, p)(b, q) = (a + p.b, p q)."""
    if x.n != y.n:
        raise DegreeMismatch(f"cannot multiply sizes {x.n} and {y.n}")
    moved = _act(x.perm, y.vec)
    return StructureElem(
        tuple(a + b for a, b in zip(x.vec, moved)),
        compose(x.perm, y.perm),
    )


def inv(x: StructureElem) -> StructureElem:
    """Group inverse: (a, p)^-1 = (-(p^-1.a), p^-1)."""
    q = x.perm.inverse()
    return StructureElem(tuple(-v for v in _act(q, x.vec)), q)


def eval_word(s: Solution, w: Word) -> StructureElem:
    """Left-to-right product of (inverses of) generators; the empty word is
    the identity."""
    acc = StructureElem.identity(s.n)
    for letter in w.letters:
        g = gen(s, abs(letter))
        acc = mul(acc, g if letter > 0 else inv(g))
    return acc


_WORD_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    """Parse words like ``"x1 x3 x2^-1"``; exponents expand to repetitions."""
    letters: list[int] = []
    for token in text.split():
        m = _WORD_TOKEN.match(token)
        if not m:
            raise ValueError(f"bad word token {token!r} (expected e.g. x2 or x2^-1)")
        idx = int(m.group(1))
        if idx == 0:
            raise ValueError("generator indices start at 1")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([idx if exp > 0 else -idx] * abs(exp))
    return Word(tuple(letters))


def check_defining_relations(s: Solution) -> Verdict:
    """For every pair (i, j) with r(i, j) = (k, l): the products of the
    corresponding generators agree as structure-group elements."""
    gens = [gen(s, i) for i in range(1, s.n + 1)]
    for i in range(1, s.n + 1):
        for j in range(1, s.n + 1):
            k, l = r_apply(s, i, j)
            if mul(gens[i - 1], gens[j - 1]) != mul(gens[k - 1], gens[l - 1]):
                return Verdict(False, {"pair": [i, j], "image_pair": [k, l]})
    return Verdict(True)
