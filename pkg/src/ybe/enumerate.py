"""Exhaustive enumeration of square-free solutions on small ground sets.

The searcher assigns the left-action maps in index order over the
permutations fixing their own index, pruning with the pair criterion
sigma_i sigma_j = sigma_k sigma_l the moment every participating map is
assigned.  All permutation arithmetic runs on precomputed index tables, so
the hot loop is integer lookups only.  Output order is deterministic
(lexicographic by image tables); the optional thread pool splits on the
first map's candidates and merges branch results in candidate order, so
threaded runs emit byte-identical streams.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .errors import CapExceeded
from .perm import Perm, is_abelian
from .perm import orbits as group_orbits
from .retract import (
    check_abelian_collapse,
    check_corollary_identity,
    multipermutation_level,
    strong_level,
)
from .solution import (
    Solution,
    Verdict,
    canonical_form,
    check_lemma_permutat,
    from_sigma,
    is_trivial,
    iyb_group,
    solution_to_doc,
)
from .twisted import (
    check_cyclic_generators,
    check_theorem_cyclic1,
    find_gtu_decomposition,
)

ENUM_CAP = 6
SWEEP_CAP = 5
HARD_CAP = 8


def _perm_tables(n: int):
    """All degree-n permutations in lexicographic order, with composition
    and inverse index tables and the per-index candidate lists."""
    perms = list(itertools.permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}
    comp = [[index[tuple(pa[pb[j] - 1] for j in range(n))] for pb in perms]
            for pa in perms]
    inverse = [0] * len(perms)
    for i, p in enumerate(perms):
        invp = [0] * n
        for j, img in enumerate(p, start=1):
            invp[img - 1] = j
        inverse[i] = index[tuple(invp)]
    candidates = [[i for i, p in enumerate(perms) if p[slot - 1] == slot]
                  for slot in range(1, n + 1)]
    return perms, comp, inverse, candidates


_DEAD = -1


def _branch(n: int, tables, first: int) -> list[tuple[int, ...]]:
    """All completions of the search with the first map fixed."""
    perms, comp, inverse, candidates = tables
    sig = [0] * (n + 1)
    sig[1] = first
    out: list[tuple[int, ...]] = []

    def ok(m: int) -> bool:
        # check every pair constraint whose four participants just became
        # fully assigned (max participant index == m)
        for i in range(1, m + 1):
            row_i = perms[sig[i]]
            for j in range(1, m + 1):
                k = row_i[j - 1]
                if k > m:
                    continue
                l = perms[inverse[sig[k]]][i - 1]
                if l > m:
                    continue
                if i != m and j != m and k != m and l != m:
                    continue
                if comp[sig[i]][sig[j]] != comp[sig[k]][sig[l]]:
                    return False
        return True

    def forced(m: int) -> int | None:
        # a constraint whose first three participants are assigned pins the
        # fourth: sigma_l = sigma_k^-1 sigma_i sigma_j when l lands on m, and
        # sigma_m = sigma_i^-1 sigma_k sigma_l when the pair is (i, m).
        # conflicting pins (or a pin violating anything) kill the branch.
        pin = None
        for i in range(1, m):
            pi = sig[i]
            row_i = perms[pi]
            k = row_i[m - 1]
            if k < m:
                l = perms[inverse[sig[k]]][i - 1]
                if l < m:
                    cand = comp[inverse[pi]][comp[sig[k]][sig[l]]]
                    if pin is None:
                        pin = cand
                    elif pin != cand:
                        return _DEAD
                elif l == m and pi != sig[k]:
                    return _DEAD
            for j in range(1, m):
                k2 = row_i[j - 1]
                if k2 < m and perms[inverse[sig[k2]]][i - 1] == m:
                    cand = comp[inverse[sig[k2]]][comp[pi][sig[j]]]
                    if pin is None:
                        pin = cand
                    elif pin != cand:
                        return _DEAD
        return pin

    def dfs(m: int) -> None:
        if m > n:
            out.append(tuple(sig[1:]))
            return
        pin = forced(m)
        if pin == _DEAD:
            return
        if pin is not None:
            if perms[pin][m - 1] != m:
                return
            sig[m] = pin
            if ok(m):
                dfs(m + 1)
            sig[m] = 0
            return
        for c in candidates[m - 1]:
            sig[m] = c
            if ok(m):
                dfs(m + 1)
        sig[m] = 0

    if ok(1):
        if n == 1:
            out.append((first,))
        else:
            dfs(2)
    return out


def enumerate_square_free(n: int, up_to_iso: bool = False, *,
                          threads: int = 1, max_n: int = ENUM_CAP) -> list[Solution]:
    """All square-free solutions on {1..n}, as validated Solution values.

    With ``up_to_iso`` the list holds one canonical representative per
    isomorphism class, sorted by flattened sigma table.  Raising ``max_n``
    past the default is an explicit opt-in; n beyond 8 is refused outright.
    """
    if n < 1:
        raise ValueError("ground set must have n >= 1")
    if n > min(max_n, HARD_CAP):
        raise CapExceeded(
            f"enumeration capped at n <= {min(max_n, HARD_CAP)}, got {n}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    tables = _perm_tables(n)
    perms, _, _, candidates = tables
    firsts = candidates[0]
    if threads == 1 or len(firsts) == 1:
        raw = [tup for f in firsts for tup in _branch(n, tables, f)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(lambda f: _branch(n, tables, f), firsts)
            raw = [tup for chunk in chunks for tup in chunk]
    sols = [from_sigma(tuple(Perm(perms[idx]) for idx in tup)) for tup in raw]
    if not up_to_iso:
        return sols
    by_key: dict[tuple[int, ...], Solution] = {}
    for sol in sols:
        canon = canonical_form(sol)
        key = tuple(x for p in canon.sigma for x in p.images)
        by_key.setdefault(key, canon)
    return [by_key[k] for k in sorted(by_key)]


@dataclass(frozen=True)
class Claim:
    """A named sweepable statement: hypotheses plus a checkable conclusion.

    Non-asserted claims are conjectures: the sweep reports their verdicts
    but a failure is a finding, not an error.
    """

    name: str
    asserted: bool
    applies: Callable[[Solution], bool]
    check: Callable[[Solution], Verdict]


def _verdict_of(value) -> Verdict:
    if isinstance(value, Verdict):
        return value
    return Verdict(bool(value))


def _abelian(s: Solution) -> bool:
    return is_abelian(iyb_group(s))


def _claim_conjecture_bound(s: Solution) -> Verdict:
    level = multipermutation_level(s)
    ok = level is not None and level < s.n
    return Verdict(ok, None if ok else {"level": level})


CLAIMS: dict[str, Claim] = {
    "abelian_collapse": Claim(
        "abelian_collapse", True,
        lambda s: _abelian(s) and not is_trivial(s),
        lambda s: _verdict_of(check_abelian_collapse(s))),
    "strong_retract_abelian": Claim(
        "strong_retract_abelian", True,
        _abelian,
        lambda s: _verdict_of(strong_level(s) is not None)),
    "rump_decomposable": Claim(
        "rump_decomposable", True,
        lambda s: s.n >= 2,
        lambda s: _verdict_of(group_orbits(iyb_group(s)).num_classes >= 2)),
    "lemma_permutat": Claim(
        "lemma_permutat", True,
        lambda s: True,
        check_lemma_permutat),
    "corollary_identity": Claim(
        "corollary_identity", True,
        _abelian,
        lambda s: _verdict_of(check_corollary_identity(s))),
    "cyclic1": Claim(
        "cyclic1", True,
        check_cyclic_generators,
        lambda s: _verdict_of(check_theorem_cyclic1(s))),
    "conjecture_I_bound": Claim(
        "conjecture_I_bound", False,
        lambda s: s.n >= 2,
        _claim_conjecture_bound),
    "gtu_universality": Claim(
        "gtu_universality", False,
        lambda s: s.n >= 2 and multipermutation_level(s) is not None,
        lambda s: _verdict_of(find_gtu_decomposition(s) is not None)),
}

FILTERS: dict[str, Callable[[Solution], bool]] = {
    "all": lambda s: True,
    "abelian": _abelian,
    "cyclic": check_cyclic_generators,
}


def sweep(n_max: int, claim: str, predicate: str = "all", *,
          max_n: int = SWEEP_CAP, threads: int = 1) -> dict:
    """Run a named claim over every enumerated square-free solution with
    n <= n_max (one representative per isomorphism class) passing the named
    filter.  The report carries per-solution verdicts and the first
    counterexample, if any."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}")
    if predicate not in FILTERS:
        raise ValueError(f"unknown filter {predicate!r}; choose from {sorted(FILTERS)}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > min(max_n, HARD_CAP):
        raise CapExceeded(f"sweep capped at n <= {min(max_n, HARD_CAP)}, got {n_max}")
    cl = CLAIMS[claim]
    keep = FILTERS[predicate]
    verdicts = []
    counterexample = None
    passed = failed = skipped = 0
    for n in range(1, n_max + 1):
        for idx, sol in enumerate(enumerate_square_free(n, up_to_iso=True,
                                                        threads=threads)):
            if not keep(sol):
                continue
            entry = {"n": n, "index": idx}
            if not cl.applies(sol):
                entry["verdict"] = "skipped"
                skipped += 1
            else:
                verdict = cl.check(sol)
                entry["verdict"] = "pass" if verdict else "fail"
                if verdict:
                    passed += 1
                else:
                    failed += 1
                    if counterexample is None:
                        counterexample = {
                            "n": n, "index": idx,
                            "solution": solution_to_doc(sol),
                            "witness": verdict.witness,
                        }
            verdicts.append(entry)
    return {
        "claim": claim,
        "asserted": cl.asserted,
        "filter": predicate,
        "n_max": n_max,
        "total": passed + failed + skipped,
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
        "ok": failed == 0,
        "counterexample": counterexample,
        "verdicts": verdicts,
    }
