"""Independent brute-force oracles for cross-checking the library.

Everything here works on raw 0-based image tuples and deliberately shares
no code with the package: solutions are filtered by directly composing the
pair map (involutivity, non-degeneracy, braid on all triples), isomorphism
classes come from trying every relabelling, and group orders from a plain
breadth-first product walk.
"""

from __future__ import annotations

import itertools


def pair_map(sig, gam):
    """r as a dict on 0-based pairs, from 0-based sigma/gamma image tuples."""
    n = len(sig)
    return {(i, j): (sig[i][j], gam[j][i]) for i in range(n) for j in range(n)}


def derive_gamma(sig):
    """gamma rows via l = sigma_k^{-1}(i); None when some row is not invertible."""
    n = len(sig)
    inv = []
    for row in sig:
        if sorted(row) != list(range(n)):
            return None
        back = [0] * n
        for j, img in enumerate(row):
            back[img] = j
        inv.append(tuple(back))
    gam = []
    for j in range(n):
        col = []
        for i in range(n):
            k = sig[i][j]
            col.append(inv[k][i])
        gam.append(tuple(col))
    return gam


def is_solution(sig, gam):
    """Involutive + non-degenerate + braid, checked from first principles."""
    n = len(sig)
    for rows in (sig, gam):
        for row in rows:
            if sorted(row) != list(range(n)):
                return False
    r = pair_map(sig, gam)
    for i in range(n):
        for j in range(n):
            if r[r[(i, j)]] != (i, j):
                return False

    def r12(t):
        a, b = r[(t[0], t[1])]
        return (a, b, t[2])

    def r23(t):
        a, b = r[(t[1], t[2])]
        return (t[0], a, b)

    for t in itertools.product(range(n), repeat=3):
        if r12(r23(r12(t))) != r23(r12(r23(t))):
            return False
    return True


def brute_force_square_free(n):
    """Every square-free solution's sigma table, by filtering the full
    Cartesian product of index-fixing permutations with the axiom checks."""
    candidates = [
        [p for p in itertools.permutations(range(n)) if p[i] == i]
        for i in range(n)
    ]
    found = []
    for sig in itertools.product(*candidates):
        gam = derive_gamma(sig)
        if gam is None:
            continue
        if is_solution(sig, gam):
            found.append(sig)
    return found


def isomorphic(sig_a, sig_b):
    """Some relabelling p with sigma^b_{p(i)} = p sigma^a_i p^{-1}, by
    trying all of them."""
    n = len(sig_a)
    for p in itertools.permutations(range(n)):
        if all(sig_b[p[i]][p[j]] == p[sig_a[i][j]]
               for i in range(n) for j in range(n)):
            return True
    return False


def iso_classes(sigs):
    """All-pairs isomorphism dedup; returns one representative per class."""
    reps = []
    for sig in sigs:
        if not any(isomorphic(sig, rep) for rep in reps):
            reps.append(sig)
    return reps


def bfs_group_order(gen_tuples):
    """Order of the group generated by 0-based image tuples."""
    n = len(gen_tuples[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for h in frontier:
            for g in gen_tuples:
                p = tuple(g[h[i]] for i in range(n))
                if p not in seen:
                    seen.add(p)
                    new.append(p)
        frontier = new
    return len(seen)
