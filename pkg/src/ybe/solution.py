"""Finite involutive non-degenerate solutions: construction and validation.

A solution on {1..n} is stored sigma-first: the left-action maps sigma_i and
right-action maps gamma_j determine the pair map

    r(i, j) = (sigma_i(j), gamma_j(i))

and the full r-table is always derived from them, never authoritative.
Validation is exhaustive (all n^2 pairs for involutivity, all n^3 triples
for the braid relation); there is no sampling anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    BraidFails,
    CapExceeded,
    CriterionFails,
    DegreeMismatch,
    IndexOutOfRange,
    NotInvariant,
    NotInvolutive,
    NotNondegenerate,
    NotSquareFreeInput,
)
from .perm import DEFAULT_ELEMENT_CAP, Partition, Perm, PermGroup, compose
from .perm import orbits as group_orbits

CANONICAL_CAP = 12


@dataclass(frozen=True)
class Solution:
    """An involutive non-degenerate solution on {1..n}."""

    n: int
    sigma: tuple[Perm, ...]
    gamma: tuple[Perm, ...]
    square_free: bool
    validated: bool


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the exhaustive axiom checks.

    ``square_free`` is a classification flag, not an axiom: a perfectly
    valid solution may be non-square-free.  ``first_failure`` names the
    first offending map, pair or triple among the three axiom checks
    (non-degeneracy, involutivity, braid), scanned in that fixed order.
    """

    involutive: bool
    nondegenerate: bool
    braid: bool
    square_free: bool
    first_failure: dict | None = None

    @property
    def all_ok(self) -> bool:
        return self.involutive and self.nondegenerate and self.braid

    def to_doc(self) -> dict:
        return {
            "involutive": self.involutive,
            "nondegenerate": self.nondegenerate,
            "braid": self.braid,
            "square_free": self.square_free,
            "first_failure": self.first_failure,
        }


@dataclass(frozen=True)
class Verdict:
    """Boolean check outcome carrying a witness when it fails."""

    ok: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def _is_bijection(row: Sequence[int], n: int) -> bool:
    return len(row) == n and sorted(row) == list(range(1, n + 1))


def _nondegenerate_failure(n: int, sigma_rows, which: str, index: int) -> ValidationReport:
    sf = all(len(r) == n and r[i0] == i0 + 1 for i0, r in enumerate(sigma_rows))
    return ValidationReport(
        involutive=False, nondegenerate=False, braid=False, square_free=sf,
        first_failure={"check": "nondegenerate", "map": which, "index": index})


def check_tables(n: int, sigma_rows: Sequence[Sequence[int]],
                 gamma_rows: Sequence[Sequence[int]]) -> ValidationReport:
    """Run all axiom checks on raw image tables.

    Works on plain integer rows so it can report on data too malformed to
    wrap in Perm values.  When some row is not a bijection the pair/triple
    checks are not evaluable and are reported False.
    """
    for name, rows in (("sigma", sigma_rows), ("gamma", gamma_rows)):
        for i, row in enumerate(rows, start=1):
            if not _is_bijection(row, n):
                return _nondegenerate_failure(n, sigma_rows, name, i)

    def r(i: int, j: int) -> tuple[int, int]:
        return sigma_rows[i - 1][j - 1], gamma_rows[j - 1][i - 1]

    involutive = True
    inv_witness = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k, l = r(i, j)
            if r(k, l) != (i, j):
                involutive = False
                inv_witness = {"check": "involutive", "pair": [i, j]}
                break
        if not involutive:
            break

    braid = True
    braid_witness = None
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                x, y = r(a, b)
                p, q = r(y, c)
                u, v = r(x, p)
                lhs = (u, v, q)
                p2, q2 = r(b, c)
                x2, y2 = r(a, p2)
                u2, v2 = r(y2, q2)
                rhs = (x2, u2, v2)
                if lhs != rhs:
                    braid = False
                    braid_witness = {"check": "braid", "triple": [a, b, c]}
                    break
            if not braid:
                break
        if not braid:
            break

    square_free = all(sigma_rows[i][i] == i + 1 for i in range(n))
    return ValidationReport(
        involutive=involutive, nondegenerate=True, braid=braid,
        square_free=square_free, first_failure=inv_witness or braid_witness)


def _raise_for_report(report: ValidationReport) -> None:
    if report.all_ok:
        return
    w = report.first_failure
    if not report.nondegenerate:
        raise NotNondegenerate(f"{w['map']}_{w['index']} is not a bijection", witness=w)
    if not report.involutive:
        raise NotInvolutive(f"r applied twice moves pair {tuple(w['pair'])}", witness=w)
    raise BraidFails(f"braid relation fails on triple {tuple(w['triple'])}", witness=w)


def _normalize_r_table(n: int, table) -> dict[tuple[int, int], tuple[int, int]]:
    """Accept a {(i,j): (k,l)} mapping or nested rows table[i-1][j-1] = (k,l)."""
    out: dict[tuple[int, int], tuple[int, int]] = {}
    if isinstance(table, Mapping):
        get = lambda i, j: table.get((i, j))
    else:
        get = lambda i, j: table[i - 1][j - 1] if len(table) >= i and len(table[i - 1]) >= j else None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entry = get(i, j)
            if entry is None:
                raise ValueError(f"r-table missing entry for pair ({i},{j})")
            k, l = entry
            if not (1 <= k <= n and 1 <= l <= n):
                raise ValueError(f"r-table entry for ({i},{j}) outside 1..{n}: {entry}")
            out[(i, j)] = (int(k), int(l))
    return out


def from_r_table(n: int, table) -> Solution:
    """Build a validated solution from the full pair map.

    The table must define r on all n^2 pairs; the left/right action rows are
    extracted and every axiom is checked before the value is returned.
    """
    if n < 1:
        raise ValueError("ground set must have n >= 1")
    tab = _normalize_r_table(n, table)
    sigma_rows = [tuple(tab[(i, j)][0] for j in range(1, n + 1)) for i in range(1, n + 1)]
    gamma_rows = [tuple(tab[(i, j)][1] for i in range(1, n + 1)) for j in range(1, n + 1)]
    report = check_tables(n, sigma_rows, gamma_rows)
    _raise_for_report(report)
    return Solution(
        n=n,
        sigma=tuple(Perm(row) for row in sigma_rows),
        gamma=tuple(Perm(row) for row in gamma_rows),
        square_free=report.square_free,
        validated=True,
    )


def from_sigma(sigmas: Sequence[Perm]) -> Solution:
    """Build a square-free solution from its left-action maps alone.

    Given maps fixing their own index, the pair map is

        r(i, j) = (k, l)   with k = sigma_i(j), l = sigma_k^{-1}(i)

    and it yields a solution exactly when sigma_i sigma_j = sigma_k sigma_l
    for every pair (i, j).  That product criterion is checked for all pairs;
    the full braid validation then runs once more as a safety net.
    """
    sigmas = tuple(sigmas)
    n = len(sigmas)
    if n < 1:
        raise ValueError("need at least one map")
    for i, s in enumerate(sigmas, start=1):
        if s.degree != n:
            raise DegreeMismatch(f"sigma_{i} has degree {s.degree}, expected {n}")
        if s(i) != i:
            raise NotSquareFreeInput(
                f"sigma_{i}({i}) = {s(i)} != {i}", witness={"index": i})
    inv = [s.inverse() for s in sigmas]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            k = sigmas[i - 1](j)
            l = inv[k - 1](i)
            if compose(sigmas[i - 1], sigmas[j - 1]) != compose(sigmas[k - 1], sigmas[l - 1]):
                raise CriterionFails(
                    f"sigma_{i} sigma_{j} != sigma_{k} sigma_{l} for pair ({i},{j})",
                    witness={"pair": [i, j], "image_pair": [k, l]})
    gamma_rows = [tuple(inv[sigmas[i - 1](j) - 1](i) for i in range(1, n + 1))
                  for j in range(1, n + 1)]
    sigma_rows = [s.images for s in sigmas]
    report = check_tables(n, sigma_rows, gamma_rows)
    _raise_for_report(report)  # unreachable when the criterion holds
    return Solution(
        n=n,
        sigma=sigmas,
        gamma=tuple(Perm(row) for row in gamma_rows),
        square_free=True,
        validated=True,
    )


def r_apply(s: Solution, i: int, j: int) -> tuple[int, int]:
    """The pair map: r(i, j) = (sigma_i(j), gamma_j(i))."""
    if not (1 <= i <= s.n and 1 <= j <= s.n):
        raise IndexOutOfRange(f"pair ({i},{j}) outside 1..{s.n}")
    return s.sigma[i - 1](j), s.gamma[j - 1](i)


def validate(s: Solution) -> ValidationReport:
    """Re-run every axiom check on a solution's tables."""
    return check_tables(s.n, [p.images for p in s.sigma], [p.images for p in s.gamma])


def is_trivial(s: Solution) -> bool:
    """True when r is the flip, i.e. every sigma_i is the identity."""
    return all(p.is_identity() for p in s.sigma)


def _distinct(perms: Sequence[Perm]) -> tuple[Perm, ...]:
    seen: set[Perm] = set()
    out = []
    for p in perms:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def iyb_group(s: Solution, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """The permutation group generated by the distinct left-action maps."""
    return PermGroup(s.n, _distinct(s.sigma), element_cap=element_cap)


def gamma_group(s: Solution, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """The group generated by the distinct right-action maps.

    As an element set this always coincides with :func:`iyb_group`.
    """
    return PermGroup(s.n, _distinct(s.gamma), element_cap=element_cap)


def check_lemma_permutat(s: Solution) -> Verdict:
    """Whenever r(i, j) = (k, l), do the compositions sigma_i sigma_j and
    sigma_k sigma_l agree?  Guaranteed for square-free solutions; reported
    as-is for general ones."""
    for i in range(1, s.n + 1):
        for j in range(1, s.n + 1):
            k, l = r_apply(s, i, j)
            if compose(s.sigma[i - 1], s.sigma[j - 1]) != compose(s.sigma[k - 1], s.sigma[l - 1]):
                return Verdict(False, {"pair": [i, j], "image_pair": [k, l]})
    return Verdict(True)


def restrict(s: Solution, subset) -> Solution:
    """Restrict to an invariant subset, relabelled order-preservingly to 1..m.

    The subset must be carried into itself by every left-action map of the
    full solution (orbit unions always qualify).
    """
    points = sorted(set(subset))
    if not points:
        raise ValueError("subset must be non-empty")
    if points[0] < 1 or points[-1] > s.n:
        raise IndexOutOfRange(f"subset contains points outside 1..{s.n}")
    sub = set(points)
    for i in range(1, s.n + 1):
        for x in points:
            if s.sigma[i - 1](x) not in sub:
                raise NotInvariant(
                    f"sigma_{i} maps {x} to {s.sigma[i - 1](x)} outside the subset",
                    witness={"map": i, "point": x})
    new_of = {old: new for new, old in enumerate(points, start=1)}
    table = {}
    for a in points:
        for b in points:
            k, l = r_apply(s, a, b)
            if l not in sub:
                raise NotInvariant(
                    f"r moves ({a},{b}) to ({k},{l}) outside the subset",
                    witness={"pair": [a, b]})
            table[(new_of[a], new_of[b])] = (new_of[k], new_of[l])
    return from_r_table(len(points), table)


def relabel(s: Solution, p: Perm) -> Solution:
    """Transport the solution along a relabelling of the points."""
    if p.degree != s.n:
        raise DegreeMismatch("relabelling must have the solution's degree")
    pinv = p.inverse()
    sigma = [None] * s.n
    gamma = [None] * s.n
    for i in range(1, s.n + 1):
        sigma[p(i) - 1] = compose(compose(p, s.sigma[i - 1]), pinv)
        gamma[p(i) - 1] = compose(compose(p, s.gamma[i - 1]), pinv)
    return Solution(
        n=s.n,
        sigma=tuple(sigma),
        gamma=tuple(gamma),
        square_free=s.square_free,
        validated=s.validated,
    )


def _point_profile(s: Solution, orbit_part: Partition) -> list[tuple]:
    sizes = [len(c) for c in orbit_part.classes()]
    return [
        (s.sigma[i - 1].cycle_type(), sizes[orbit_part.class_of[i - 1] - 1],
         s.sigma[i - 1](i) == i)
        for i in range(1, s.n + 1)
    ]


def is_isomorphic(a: Solution, b: Solution) -> Perm | None:
    """Find a relabelling p with sigma^b_{p(i)} = p sigma^a_i p^{-1} for all i.

    For involutive solutions that single condition already transports the
    whole pair map.  The search prunes by per-point invariants (cycle type
    of the sigma map, orbit size, diagonal fixedness).
    """
    if a.n != b.n:
        return None
    n = a.n
    if a.sigma == b.sigma:
        return Perm.identity(n)
    prof_a = _point_profile(a, group_orbits(iyb_group(a)))
    prof_b = _point_profile(b, group_orbits(iyb_group(b)))
    if sorted(prof_a) != sorted(prof_b):
        return None
    candidates = [[j for j in range(1, n + 1) if prof_b[j - 1] == prof_a[i - 1]]
                  for i in range(1, n + 1)]

    p = [0] * (n + 1)  # old -> new, 0 = unassigned
    used = [False] * (n + 1)

    def consistent(i: int) -> bool:
        # check every constraint whose three participants are now assigned
        for x in range(1, n + 1):
            if p[x] == 0:
                continue
            for y, z in ((i, x), (x, i)):
                if p[y] == 0 or p[z] == 0:
                    continue
                img = a.sigma[y - 1](z)
                if p[img] != 0 and b.sigma[p[y] - 1](p[z]) != p[img]:
                    return False
        return True

    def dfs(i: int) -> bool:
        if i > n:
            return True
        for j in candidates[i - 1]:
            if used[j]:
                continue
            p[i] = j
            used[j] = True
            if consistent(i) and dfs(i + 1):
                return True
            p[i] = 0
            used[j] = False
        return False

    if dfs(1):
        return Perm(tuple(p[1:]))
    return None


def _flat_table(s: Solution) -> tuple[int, ...]:
    return tuple(x for perm in s.sigma for x in perm.images)


def canonical_form(s: Solution, cap: int = CANONICAL_CAP) -> Solution:
    """The relabelling whose flattened sigma table is lexicographically least.

    Two solutions are isomorphic iff their canonical forms are equal.  The
    search is a depth-first relabelling enumeration with prefix bounding;
    worst case is factorial on highly symmetric inputs, so the size cap
    keeps the cost explicit.
    """
    if s.n > cap:
        raise CapExceeded(f"canonicalization capped at n <= {cap}, got {s.n}")
    n = s.n
    if is_trivial(s):
        return s
    sig = [p.images for p in s.sigma]

    best: list[tuple[int, ...] | None] = [None]
    best_p: list[tuple[int, ...] | None] = [None]
    old_of = [0] * (n + 1)  # new -> old
    new_of = [0] * (n + 1)  # old -> new

    def prefix_cmp(depth: int) -> int:
        """Compare the contiguous known prefix of the flattened table against
        best: -1 strictly smaller, 1 strictly larger, 0 tied-or-unknown.
        Comparison stops at the first entry not yet determined, since later
        entries cannot decide a lexicographic comparison."""
        if best[0] is None:
            return -1
        bt = best[0]
        pos = 0
        for a in range(1, n + 1):
            if a > depth:
                return 0
            row = sig[old_of[a] - 1]
            for b in range(1, n + 1):
                if b > depth:
                    return 0
                img = new_of[row[old_of[b] - 1]]
                if img == 0:
                    return 0
                if img != bt[pos]:
                    return -1 if img < bt[pos] else 1
                pos += 1
        return 0

    def dfs(depth: int) -> None:
        if depth > n:
            flat = tuple(new_of[sig[old_of[a] - 1][old_of[b] - 1]]
                         for a in range(1, n + 1) for b in range(1, n + 1))
            if best[0] is None or flat < best[0]:
                best[0] = flat
                best_p[0] = tuple(new_of[1:])
            return
        for old in range(1, n + 1):
            if new_of[old]:
                continue
            old_of[depth] = old
            new_of[old] = depth
            if prefix_cmp(depth) <= 0:
                dfs(depth + 1)
            old_of[depth] = 0
            new_of[old] = 0

    dfs(1)
    return relabel(s, Perm(best_p[0]))


# --- JSON solution documents -------------------------------------------------

def solution_to_doc(s: Solution) -> dict:
    """The sigma-form JSON document: 1-indexed image rows."""
    return {"n": s.n, "sigma": [list(p.images) for p in s.sigma]}


def doc_to_tables(doc: dict) -> tuple[int, list[tuple[int, ...]], list[tuple[int, ...]] | None]:
    """Parse a document into raw (n, sigma rows, gamma rows).

    Sigma form derives the right-action rows via the involutive formula
    l = sigma_k^{-1}(i); when some sigma row is not even a bijection that
    derivation is impossible and the gamma rows come back as None.  Shape
    problems (wrong sizes, non-integers) raise ValueError.
    """
    if not isinstance(doc, dict) or "n" not in doc:
        raise ValueError("solution document must be an object with an 'n' field")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"invalid ground-set size: {n!r}")
    if "sigma" in doc:
        rows = doc["sigma"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("sigma table must be n rows of n images")
        if any(not isinstance(x, int) for r in rows for x in r):
            raise ValueError("sigma table entries must be integers")
        sigma_rows = [tuple(r) for r in rows]
        if any(not _is_bijection(r, n) for r in sigma_rows):
            return n, sigma_rows, None
        invs = []
        for row in sigma_rows:
            inv = [0] * n
            for j, img in enumerate(row, start=1):
                inv[img - 1] = j
            invs.append(inv)
        gamma_rows = [tuple(invs[sigma_rows[i][j] - 1][i] for i in range(n))
                      for j in range(n)]
        return n, sigma_rows, gamma_rows
    if "r" in doc:
        tab = _normalize_r_table(n, doc["r"])
        sigma_rows = [tuple(tab[(i, j)][0] for j in range(1, n + 1))
                      for i in range(1, n + 1)]
        gamma_rows = [tuple(tab[(i, j)][1] for i in range(1, n + 1))
                      for j in range(1, n + 1)]
        return n, sigma_rows, gamma_rows
    raise ValueError("solution document needs a 'sigma' or 'r' field")


def report_for_doc(doc: dict) -> ValidationReport:
    """Validation report for a document, however malformed its tables."""
    n, sigma_rows, gamma_rows = doc_to_tables(doc)
    if gamma_rows is None:
        bad = next(i for i, r in enumerate(sigma_rows, start=1)
                   if not _is_bijection(r, n))
        return _nondegenerate_failure(n, sigma_rows, "sigma", bad)
    return check_tables(n, sigma_rows, gamma_rows)


def solution_from_doc(doc: dict) -> Solution:
    """Read either document form and return a validated solution."""
    n, sigma_rows, gamma_rows = doc_to_tables(doc)
    if gamma_rows is None:
        report = report_for_doc(doc)
    else:
        report = check_tables(n, sigma_rows, gamma_rows)
    _raise_for_report(report)
    return Solution(
        n=n,
        sigma=tuple(Perm(row) for row in sigma_rows),
        gamma=tuple(Perm(row) for row in gamma_rows),
        square_free=report.square_free,
        validated=True,
    )
