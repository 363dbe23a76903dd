"""Cyclic conditions and generalized twisted unions.

A twisted-union split is a partition of the ground set into two non-empty
invariant parts whose cross-actions are suitably constant.  Candidate parts
must be unions of orbits (invariance forces this), so the search space is
the proper non-empty orbit subsets, checked as ordered pairs because the
defining conditions are not manifestly symmetric.
"""

from __future__ import annotations

import itertools

from .errors import NotAPartition, NotInvariant, PreconditionUnmet
from .perm import Perm, are_conjugate, is_cyclic
from .perm import orbits as group_orbits
from .retract import strong_level
from .solution import Solution, Verdict, iyb_group


def check_cyclic_condition(s: Solution) -> bool:
    """One-step cyclic identity: the right output of r is unchanged when the
    second input advances along the first input's sigma cycle, i.e.
    gamma_{sigma_w(j)}(w) = gamma_j(w) for all w, j.  The chain form follows
    by induction."""
    for w in range(1, s.n + 1):
        for j in range(1, s.n + 1):
            if s.gamma[s.sigma[w - 1](j) - 1](w) != s.gamma[j - 1](w):
                return False
    return True


def check_full_cyclic_condition(s: Solution) -> bool:
    """Both one-step identities of the full cyclic grid:
    sigma_{gamma_j(w)}(j) = sigma_w(j) and gamma_{sigma_w(j)}(w) = gamma_j(w)
    for all w, j; the whole grid follows by induction."""
    for w in range(1, s.n + 1):
        for j in range(1, s.n + 1):
            if s.sigma[s.gamma[j - 1](w) - 1](j) != s.sigma[w - 1](j):
                return False
            if s.gamma[s.sigma[w - 1](j) - 1](w) != s.gamma[j - 1](w):
                return False
    return True


def check_cyclic_generators(s: Solution) -> bool:
    """Every left-action map is a single cycle (identity included)."""
    return all(is_cyclic(p) for p in s.sigma)


def _check_split(s: Solution, Y, Z) -> tuple[tuple[int, ...], tuple[int, ...]]:
    ys = tuple(sorted(set(Y)))
    zs = tuple(sorted(set(Z)))
    if not ys or not zs or len(ys) + len(zs) != s.n or \
            sorted(ys + zs) != list(range(1, s.n + 1)):
        raise NotAPartition(f"Y and Z must split 1..{s.n} into non-empty parts")
    for name, part in (("Y", ys), ("Z", zs)):
        pset = set(part)
        for i in range(1, s.n + 1):
            for x in part:
                img = s.sigma[i - 1](x)
                if img not in pset:
                    raise NotInvariant(
                        f"sigma_{i} maps {x} out of {name}",
                        witness={"part": name, "map": i, "point": x})
    return ys, zs


def _restriction_witness(a: Perm, b: Perm, points) -> int | None:
    for x in points:
        if a(x) != b(x):
            return x
    return None


def check_gtu_pair(s: Solution, Y, Z, mode: str = "general") -> Verdict:
    """Check the twisted-union conditions for the ordered split (Y, Z).

    In ``general`` mode this is constancy of sigma_{gamma_y(z)} restricted
    to Y over y (condition 1) and of gamma_{sigma_z(y)} restricted to Z over
    z (condition 2).  In ``squarefree`` mode the equivalent one-sided forms
    are used: sigma_{sigma_y(z)}|Y = sigma_z|Y (condition 3) and
    sigma_{sigma_z(y)}|Z = sigma_y|Z (condition 4).  Witnesses carry the
    lexicographically smallest offending indices.
    """
    if mode not in ("general", "squarefree"):
        raise ValueError(f"unknown mode {mode!r}")
    ys, zs = _check_split(s, Y, Z)
    if mode == "squarefree":
        for y in ys:
            for z in zs:
                k = s.sigma[y - 1](z)
                x = _restriction_witness(s.sigma[k - 1], s.sigma[z - 1], ys)
                if x is not None:
                    return Verdict(False, {
                        "condition": 3, "y": y, "z": z, "moved_index": k,
                        "point": x,
                        "values": [s.sigma[k - 1](x), s.sigma[z - 1](x)]})
        for z in zs:
            for y in ys:
                k = s.sigma[z - 1](y)
                x = _restriction_witness(s.sigma[k - 1], s.sigma[y - 1], zs)
                if x is not None:
                    return Verdict(False, {
                        "condition": 4, "z": z, "y": y, "moved_index": k,
                        "point": x,
                        "values": [s.sigma[k - 1](x), s.sigma[y - 1](x)]})
        return Verdict(True)
    for z in zs:
        base = s.gamma[ys[0] - 1](z)
        for y in ys[1:]:
            k = s.gamma[y - 1](z)
            x = _restriction_witness(s.sigma[k - 1], s.sigma[base - 1], ys)
            if x is not None:
                return Verdict(False, {
                    "condition": 1, "z": z, "y_pair": [ys[0], y],
                    "moved_indices": [base, k], "point": x,
                    "values": [s.sigma[base - 1](x), s.sigma[k - 1](x)]})
    for y in ys:
        base = s.sigma[zs[0] - 1](y)
        for z in zs[1:]:
            k = s.sigma[z - 1](y)
            x = _restriction_witness(s.gamma[k - 1], s.gamma[base - 1], zs)
            if x is not None:
                return Verdict(False, {
                    "condition": 2, "y": y, "z_pair": [zs[0], z],
                    "moved_indices": [base, k], "point": x,
                    "values": [s.gamma[base - 1](x), s.gamma[k - 1](x)]})
    return Verdict(True)


def _orbit_union_candidates(s: Solution):
    orbs = group_orbits(iyb_group(s)).classes()
    m = len(orbs)
    subsets = sorted(
        itertools.chain.from_iterable(
            itertools.combinations(range(m), r) for r in range(1, m)))
    for sub in subsets:
        y = tuple(sorted(x for idx in sub for x in orbs[idx]))
        z = tuple(sorted(set(range(1, s.n + 1)) - set(y)))
        yield y, z


def find_gtu_decomposition(s: Solution) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First ordered orbit-union split satisfying the twisted-union
    conditions (square-free form when the solution is square-free), or None
    when every candidate fails."""
    if s.n < 2:
        raise PreconditionUnmet("twisted-union search needs n >= 2")
    mode = "squarefree" if s.square_free else "general"
    for y, z in _orbit_union_candidates(s):
        if check_gtu_pair(s, y, z, mode=mode):
            return y, z
    return None


def gtu_report(s: Solution, mode: str = "auto") -> dict:
    """Full verdict over every candidate split, with per-candidate witnesses
    when the solution is not a twisted union."""
    if mode == "auto":
        mode = "squarefree" if s.square_free else "general"
    if s.n < 2:
        return {"decomposable": False, "Y": None, "Z": None, "mode": mode,
                "witness": {"reason": "ground set has a single point", "failures": []}}
    failures = []
    for y, z in _orbit_union_candidates(s):
        verdict = check_gtu_pair(s, y, z, mode=mode)
        if verdict:
            return {"decomposable": True, "Y": list(y), "Z": list(z),
                    "mode": mode, "witness": None}
        failures.append({"Y": list(y), "Z": list(z), "witness": verdict.witness})
    return {"decomposable": False, "Y": None, "Z": None, "mode": mode,
            "witness": {"failures": failures}}


def _require_cyclic_square_free(s: Solution) -> None:
    if not s.validated:
        raise PreconditionUnmet("solution is not validated")
    if not s.square_free:
        raise PreconditionUnmet("solution is not square-free")
    if not check_cyclic_generators(s):
        raise PreconditionUnmet("some left-action map is not a single cycle")


def check_key2(s: Solution) -> bool:
    """For cyclic-generator square-free solutions: within one orbit, either
    every member's sigma moves a given orbit or none does, and all members'
    sigma maps are pairwise conjugate in the group."""
    _require_cyclic_square_free(s)
    group = iyb_group(s)
    orbs = group_orbits(group).classes()
    for orb in orbs:
        for target in orbs:
            moved = [any(s.sigma[j - 1](x) != x for x in target) for j in orb]
            if any(moved) and not all(moved):
                return False
        first = s.sigma[orb[0] - 1]
        for j in orb[1:]:
            if not are_conjugate(group, first, s.sigma[j - 1]):
                return False
    return True


def check_theorem_cyclic1(s: Solution) -> bool:
    """Cyclic-generator square-free solutions are strongly retractable and,
    beyond one point, admit a twisted-union split."""
    _require_cyclic_square_free(s)
    if strong_level(s) is None:
        return False
    if s.n > 1 and find_gtu_decomposition(s) is None:
        return False
    return True
