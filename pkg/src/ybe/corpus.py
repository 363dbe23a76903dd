"""Built-in named solutions.

The 24-point example is embedded as cycle-notation strings and parsed at
load, so the fixture doubles as a parser test.  It is the standard
counterexample showing that a multipermutation square-free solution with
abelian group need not split as a twisted union.
"""

from __future__ import annotations

import functools
import re

from .perm import Perm, perm_from_cycle_str
from .solution import Solution, from_sigma

# index groups sharing one left-action map, with that map in cycle notation
E24_SIGMA_CYCLES: tuple[tuple[tuple[int, ...], str], ...] = (
    ((1, 2), "(9,10)(11,12)(13,14)(15,16)(17,18)(19,20)(21,22)(23,24)"),
    ((3, 4), "(9,11)(10,12)(13,15)(14,16)(17,18)(19,20)(21,22)(23,24)"),
    ((5, 6), "(9,10)(11,12)(13,14)(15,16)(17,19)(18,20)(21,23)(22,24)"),
    ((7, 8), "(9,11)(10,12)(13,15)(14,16)(17,19)(18,20)(21,23)(22,24)"),
    ((9, 12, 13, 16), "(1,5)(2,6)(3,7)(4,8)(17,21)(18,22)(19,23)(20,24)"),
    ((10, 11, 14, 15), "(1,5)(2,6)(3,7)(4,8)(17,24)(18,23)(19,22)(20,21)"),
    ((17, 20, 21, 24), "(9,13)(10,14)(11,15)(12,16)(1,3,2,4)(5,7,6,8)"),
    ((18, 19, 22, 23), "(9,16)(10,15)(11,14)(12,13)(1,3,2,4)(5,7,6,8)"),
)


def trivial(n: int) -> Solution:
    """The flip solution: r(i, j) = (j, i), every sigma the identity."""
    if n < 1:
        raise ValueError("ground set must have n >= 1")
    return from_sigma(tuple(Perm.identity(n) for _ in range(n)))


@functools.lru_cache(maxsize=None)
def e24() -> Solution:
    """The 24-point square-free solution with abelian group, three orbits
    and multipermutation level 3 that admits no twisted-union split."""
    sigma: list[Perm | None] = [None] * 24
    for indices, cycles in E24_SIGMA_CYCLES:
        p = perm_from_cycle_str(24, cycles)
        for i in indices:
            sigma[i - 1] = p
    assert all(p is not None for p in sigma)
    return from_sigma(tuple(sigma))


@functools.lru_cache(maxsize=None)
def s4() -> Solution:
    """A minimal non-trivial fixture on four points: 1 and 2 swap 3,4;
    3 and 4 swap 1,2.  Abelian group, level 2, twisted-union split
    ({1,2}, {3,4})."""
    swap34 = Perm.from_cycles(4, [(3, 4)])
    swap12 = Perm.from_cycles(4, [(1, 2)])
    return from_sigma((swap34, swap34, swap12, swap12))


_TRIVIAL_NAME = re.compile(r"^trivial(\d+)$")


def names() -> list[str]:
    return ["e24", "s4", "trivial<n>"]


def get(name: str) -> Solution:
    """Look up a corpus solution by name; trivial ones as e.g. ``trivial4``."""
    if name == "e24":
        return e24()
    if name == "s4":
        return s4()
    m = _TRIVIAL_NAME.match(name)
    if m:
        return trivial(int(m.group(1)))
    raise KeyError(f"unknown corpus solution {name!r}; known: {', '.join(names())}")
