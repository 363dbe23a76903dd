"""Retraction: collapsing points with equal left-action maps.

Two flavours of collapse are provided.  The plain retract identifies points
whose sigma maps coincide; the orbit-refined variant additionally requires
the points to lie in one orbit of the permutation group.  Iterating either
quotient drives the fixpoint machinery behind multipermutation levels and
strong retractability.
"""

from __future__ import annotations

from .errors import IncompatiblePartition, PreconditionUnmet
from .perm import Partition, Perm
from .perm import is_abelian as group_is_abelian
from .perm import orbits as group_orbits
from .solution import (
    Solution,
    Verdict,
    from_r_table,
    is_trivial,
    iyb_group,
    r_apply,
)


def retract_classes(s: Solution) -> Partition:
    """Points grouped by identical sigma maps."""
    return Partition.from_labels([p.images for p in s.sigma])


def rho_classes(s: Solution) -> Partition:
    """Retract classes refined by the orbit partition: points collapse only
    when their sigma maps agree and they share an orbit."""
    return retract_classes(s).refine(group_orbits(iyb_group(s)))


def quotient(s: Solution, p: Partition) -> Solution:
    """The induced solution on the classes of a compatible partition.

    Compatibility means the class of r's output pair depends only on the
    classes of the input pair.  Quotient point k is the k-th class in
    minimal-element order and its representative is that minimal element.
    The induced solution is re-validated from scratch; a failure there
    would be an internal invariant violation, not a user error.
    """
    if p.n != s.n:
        raise ValueError("partition and solution sizes differ")
    cls = p.class_of
    seen: dict[tuple[int, int], tuple[int, int, tuple[int, int]]] = {}
    for i in range(1, s.n + 1):
        for j in range(1, s.n + 1):
            k, l = r_apply(s, i, j)
            key = (cls[i - 1], cls[j - 1])
            val = (cls[k - 1], cls[l - 1])
            if key in seen and seen[key][2] != val:
                w, v, _ = seen[key]
                raise IncompatiblePartition(
                    f"pairs ({w},{v}) and ({i},{j}) are class-equal but their "
                    "images are not",
                    witness={"pair_a": [w, v], "pair_b": [i, j]})
            if key not in seen:
                seen[key] = (i, j, val)
    reps = p.representatives()
    table = {}
    for a, ra in enumerate(reps, start=1):
        for b, rb in enumerate(reps, start=1):
            k, l = r_apply(s, ra, rb)
            table[(a, b)] = (cls[k - 1], cls[l - 1])
    return from_r_table(p.num_classes, table)


def ret(s: Solution) -> Solution:
    """One plain retraction step."""
    return quotient(s, retract_classes(s))


def ret_rho(s: Solution) -> Solution:
    """One orbit-refined retraction step."""
    return quotient(s, rho_classes(s))


def multipermutation_level(s: Solution) -> int | None:
    """Least m with the m-fold retract a single point, or None when a
    non-collapsing iterate of size > 1 is reached first."""
    cur = s
    level = 0
    while cur.n > 1:
        classes = retract_classes(cur)
        if classes.num_classes == cur.n:
            return None
        cur = quotient(cur, classes)
        level += 1
    return level


def strong_level(s: Solution) -> int | None:
    """Least m with the m-fold orbit-refined retract a trivial solution, or
    None when a non-trivial fixpoint is reached.  Already-trivial input
    reports level 0."""
    cur = s
    level = 0
    while not is_trivial(cur):
        classes = rho_classes(cur)
        if classes.num_classes == cur.n:
            return None
        cur = quotient(cur, classes)
        level += 1
    return level


def check_epimorphism(s: Solution) -> Verdict:
    """The generator map onto the orbit-refined quotient's group is
    well-defined and equivariant: for every i and every point v,
    class(sigma_i(v)) = sigma'_{class(i)}(class(v))."""
    p = rho_classes(s)
    q = quotient(s, p)
    cls = p.class_of
    for i in range(1, s.n + 1):
        for v in range(1, s.n + 1):
            if cls[s.sigma[i - 1](v) - 1] != q.sigma[cls[i - 1] - 1](cls[v - 1]):
                return Verdict(False, {"map": i, "point": v})
    return Verdict(True)


def check_orbit_preservation(s: Solution) -> bool:
    """Orbit count survives the orbit-refined quotient, and each quotient
    orbit is exactly the image of one orbit."""
    p = rho_classes(s)
    q = quotient(s, p)
    orbs = group_orbits(iyb_group(s)).classes()
    orbs_q = set(group_orbits(iyb_group(q)).classes())
    if len(orbs) != len(orbs_q):
        return False
    images = set()
    for orb in orbs:
        image = tuple(sorted({p.class_of[x - 1] for x in orb}))
        if image not in orbs_q:
            return False
        images.add(image)
    return len(images) == len(orbs)


def _require(s: Solution, *, square_free: bool = False, abelian: bool = False,
             nontrivial: bool = False) -> None:
    if not s.validated:
        raise PreconditionUnmet("solution is not validated")
    if square_free and not s.square_free:
        raise PreconditionUnmet("solution is not square-free")
    if abelian and not group_is_abelian(iyb_group(s)):
        raise PreconditionUnmet("the permutation group is not abelian")
    if nontrivial and is_trivial(s):
        raise PreconditionUnmet("solution is trivial")


def check_abelian_collapse(s: Solution) -> bool:
    """For non-trivial square-free solutions with abelian group: some
    orbit-refined class has size >= 2, so the quotient genuinely collapses."""
    _require(s, square_free=True, abelian=True, nontrivial=True)
    return any(len(c) >= 2 for c in rho_classes(s).classes())


def check_corollary_identity(s: Solution) -> bool:
    """For square-free solutions with abelian group: every sigma_i fixes the
    whole orbit of i pointwise."""
    _require(s, square_free=True, abelian=True)
    for orb in group_orbits(iyb_group(s)).classes():
        for i in orb:
            if any(s.sigma[i - 1](x) != x for x in orb):
                return False
    return True


def check_lemma_moves(s: Solution) -> bool:
    """For square-free solutions with abelian group: a sigma_i fixing one
    point of an orbit fixes that orbit pointwise."""
    _require(s, square_free=True, abelian=True)
    orbit_part = group_orbits(iyb_group(s))
    orbit_sets = orbit_part.classes()
    for i in range(1, s.n + 1):
        for j in range(1, s.n + 1):
            if s.sigma[i - 1](j) != j:
                continue
            orb = orbit_sets[orbit_part.class_of[j - 1] - 1]
            if any(s.sigma[i - 1](x) != x for x in orb):
                return False
    return True


def check_lemma_key(s: Solution) -> bool:
    """For orbits fixed pointwise by all of their own sigma maps: moving any
    point j along a sigma indexed inside the orbit leaves sigma_j's
    restriction to that orbit unchanged.  One-step form; chains follow by
    induction."""
    _require(s)
    for orb in group_orbits(iyb_group(s)).classes():
        if any(s.sigma[l - 1](x) != x for l in orb for x in orb):
            continue
        for i in orb:
            for j in range(1, s.n + 1):
                j2 = s.sigma[i - 1](j)
                if s.sigma[j - 1].restricted_images(orb) != \
                        s.sigma[j2 - 1].restricted_images(orb):
                    return False
    return True
