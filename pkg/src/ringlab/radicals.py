"""Nil sets, radicals and ring-class predicates for finite rings.

The prime radical is computed two ways that share no code beyond the
tables: as the intersection of all prime ideals (small rings only), and as
the set of strongly nilpotent elements via reachability in the m-sequence
graph (any tabulated ring).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .rings import (IDEAL_CAP, FiniteRing, Ideal, SizeCapExceeded, enumerate_ideals,
                    principal_ideal)

UPPER_CAP = 1024


def nilpotency_indices(R: FiniteRing) -> np.ndarray:
    """Least ``k >= 1`` with ``x^k = 0``, or 0 when ``x`` is not nilpotent."""
    n = R.order
    out = np.zeros(n, dtype=np.int64)
    cur = np.arange(n)
    alive = np.ones(n, dtype=bool)
    for k in range(1, n + 1):
        hit = alive & (cur == R.zero)
        out[hit] = k
        alive &= ~hit
        if not alive.any():
            break
        cur = R.mul[cur, np.arange(n)]
    return out


def nilpotents(R: FiniteRing) -> frozenset:
    return frozenset(int(x) for x in np.flatnonzero(nilpotency_indices(R)))


def _mask(R: FiniteRing, xs) -> np.ndarray:
    m = np.zeros(R.order, dtype=bool)
    m[list(xs)] = True
    return m


def is_prime_ideal(R: FiniteRing, P: Ideal, arb: np.ndarray | None = None) -> bool:
    """``P`` proper and ``aRb`` inside ``P`` forces ``a`` or ``b`` into ``P``."""
    if len(P) == R.order:
        return False
    if arb is None:
        arb = R.mul[R.mul[:, :, None], np.arange(R.order)[None, None, :]]
    m = P.mask()
    inside = m[arb].all(axis=1)          # inside[a, b] == (aRb subset of P)
    outside = ~m
    return not (inside & outside[:, None] & outside[None, :]).any()


def prime_ideals(R: FiniteRing, cap: int = IDEAL_CAP) -> list[Ideal]:
    arb = R.mul[R.mul[:, :, None], np.arange(R.order)[None, None, :]]
    return [P for P in enumerate_ideals(R, cap) if is_prime_ideal(R, P, arb)]


def lower_nilradical_primes(R: FiniteRing, cap: int = IDEAL_CAP) -> frozenset:
    m = np.ones(R.order, dtype=bool)
    for P in prime_ideals(R, cap):
        m &= P.mask()
    return frozenset(int(x) for x in np.flatnonzero(m))


def _msequence_radical(R: FiniteRing, domain: np.ndarray, middle: np.ndarray) -> frozenset:
    """Strongly nilpotent elements of ``domain`` with middle factors from ``middle``.

    Nodes are the nonzero elements of ``domain``; ``a -> b`` iff ``b`` is a
    nonzero element of ``a * middle * a``.  An element is strongly nilpotent
    iff no cycle is reachable from it.
    """
    nodes = np.flatnonzero(domain & (np.arange(R.order) != R.zero))
    if len(nodes) == 0:
        return frozenset(int(x) for x in np.flatnonzero(domain))
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[nodes] = np.arange(len(nodes))
    rows, cols = [], []
    for i, a in enumerate(nodes):
        targets = np.unique(R.mul[R.mul[a, middle], a])
        targets = pos[targets]
        targets = targets[targets >= 0]
        rows.append(np.full(len(targets), i))
        cols.append(targets)
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    k = len(nodes)
    g = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(k, k))
    ncomp, label = connected_components(g, directed=True, connection="strong")
    size = np.bincount(label, minlength=ncomp)
    cyclic = size[label] > 1
    cyclic[rows[rows == cols]] = True
    # nodes that can reach a cyclic node: reverse BFS from a super source
    start = np.flatnonzero(cyclic)
    bad = np.zeros(k, dtype=bool)
    if len(start):
        rev = csr_matrix((np.ones(len(rows) + len(start), dtype=np.int8),
                          (np.concatenate([cols, np.full(len(start), k)]),
                           np.concatenate([rows, start]))), shape=(k + 1, k + 1))
        reach = breadth_first_order(rev, k, directed=True, return_predecessors=False)
        bad[reach[reach < k]] = True
    good = nodes[~bad]
    return frozenset([R.zero] + [int(x) for x in good]) if domain[R.zero] else frozenset(
        int(x) for x in good)


def lower_nilradical_msequence(R: FiniteRing) -> frozenset:
    full = np.ones(R.order, dtype=bool)
    return _msequence_radical(R, full, np.arange(R.order))


lower_nilradical = lower_nilradical_msequence


def upper_nilradical(R: FiniteRing, cap: int = UPPER_CAP) -> frozenset:
    """Largest nil ideal: the sum of all nil principal ideals.

    A sum of nil ideals is nil, so summing the nil principal ideals gives
    the sum of all nil ideals; the result is re-checked to be nil.
    """
    if R.order > cap:
        raise SizeCapExceeded(f"upper nilradical capped at order {cap}")
    nil = nilpotency_indices(R) > 0
    acc = np.zeros(R.order, dtype=bool)
    acc[R.zero] = True
    for x in np.flatnonzero(nil):
        if acc[x]:
            continue
        p = principal_ideal(R, int(x))
        if nil[p].all():
            ia, ib = np.flatnonzero(acc), np.flatnonzero(p)
            acc = np.zeros(R.order, dtype=bool)
            acc[np.unique(R.add[np.ix_(ia, ib)])] = True
    assert nil[acc].all(), "sum of nil ideals is not nil"
    return frozenset(int(x) for x in np.flatnonzero(acc))


@dataclass(frozen=True)
class RadicalProfile:
    ring: FiniteRing = field(repr=False)
    nilpotents: frozenset
    lower: frozenset
    upper: frozenset
    nilpotency_index: dict = field(repr=False)

    def to_dict(self) -> dict:
        R = self.ring
        return {
            "ring": R.name,
            "nilpotents": [R.labels[x] for x in sorted(self.nilpotents)],
            "lower": [R.labels[x] for x in sorted(self.lower)],
            "upper": [R.labels[x] for x in sorted(self.upper)],
        }


def radical_profile(R: FiniteRing) -> RadicalProfile:
    idx = nilpotency_indices(R)
    nil = frozenset(int(x) for x in np.flatnonzero(idx))
    return RadicalProfile(R, nil, lower_nilradical_msequence(R), upper_nilradical(R),
                          {x: int(idx[x]) for x in sorted(nil)})


# -- class predicates -------------------------------------------------------

def semicommutative_witness(R: FiniteRing) -> tuple | None:
    """Smallest ``(a, c, b)`` (ordered by a, then b, then c) with ab = 0, acb != 0."""
    n = R.order
    for a in range(n):
        bs = np.flatnonzero(R.mul[a] == R.zero)
        if len(bs) == 0:
            continue
        acb = R.mul[R.mul[a][:, None], bs[None, :]]          # [c, b]
        bad = acb != R.zero
        if bad.any():
            cols = np.flatnonzero(bad.any(axis=0))
            b = int(bs[cols[0]])
            c = int(np.flatnonzero(bad[:, cols[0]])[0])
            return (a, c, b)
    return None


def is_semicommutative(R: FiniteRing) -> bool:
    return semicommutative_witness(R) is None


def is_dedekind_finite(R: FiniteRing) -> bool:
    a, b = np.nonzero(R.mul == R.one)
    return bool((R.mul[b, a] == R.one).all())


@dataclass(frozen=True)
class ClassFlags:
    reduced: bool
    semicommutative: bool
    two_primal: bool
    NI: bool
    dedekind_finite: bool
    semicommutative_witness: tuple | None = None

    def as_dict(self) -> dict:
        return {"reduced": self.reduced, "semicommutative": self.semicommutative,
                "two_primal": self.two_primal, "NI": self.NI,
                "dedekind_finite": self.dedekind_finite}


def class_predicates(R: FiniteRing, profile: RadicalProfile | None = None) -> ClassFlags:
    p = profile or radical_profile(R)
    w = semicommutative_witness(R)
    return ClassFlags(
        reduced=p.nilpotents == frozenset({R.zero}),
        semicommutative=w is None,
        two_primal=p.lower == p.nilpotents,
        NI=p.upper == p.nilpotents,
        dedekind_finite=is_dedekind_finite(R),
        semicommutative_witness=w,
    )


# -- ideals viewed as rings without identity --------------------------------

def is_semicommutative_ideal(R: FiniteRing, I: Ideal) -> tuple[bool, tuple | None]:
    """Semicommutativity of ``I`` as a rng: ab = 0 forces aIb = 0 for a, b in I.

    Returns ``(flag, witness)`` with witness ``(a, c, b)``, all in ``I``.
    """
    mem = np.array(I.sorted())
    for a in mem:
        prods = R.mul[a, mem]
        bs = mem[prods == R.zero]
        if len(bs) == 0:
            continue
        acb = R.mul[R.mul[a, mem][:, None], bs[None, :]]
        bad = acb != R.zero
        if bad.any():
            col = int(np.flatnonzero(bad.any(axis=0))[0])
            c = int(mem[np.flatnonzero(bad[:, col])[0]])
            return False, (int(a), c, int(bs[col]))
    return True, None


def nilpotents_in(R: FiniteRing, I: Ideal) -> frozenset:
    nil = nilpotency_indices(R) > 0
    return frozenset(x for x in I.members if nil[x])


def lower_nilradical_of_ideal(R: FiniteRing, I: Ideal) -> frozenset:
    """Strongly nilpotent elements of ``I`` using only products inside ``I``."""
    m = I.mask()
    return _msequence_radical(R, m, np.flatnonzero(m))


def is_two_primal_rng(R: FiniteRing, I: Ideal) -> bool:
    return nilpotents_in(R, I) == lower_nilradical_of_ideal(R, I)


# -- weak annihilators ------------------------------------------------------

def weak_annihilator(R: FiniteRing, X) -> frozenset:
    nil = nilpotency_indices(R) > 0
    ok = np.ones(R.order, dtype=bool)
    for x in X:
        ok &= nil[R.mul[x]]
    return frozenset(int(a) for a in np.flatnonzero(ok))


def weak_annihilator_family(R: FiniteRing, cap: int = 64) -> set[frozenset]:
    """All weak annihilators ``N_R(U)`` for subsets ``U``.

    ``N_R(U)`` is the intersection of the singleton annihilators over ``U``,
    so the family is the intersection-closure of the singletons plus ``R``.
    """
    if R.order > cap:
        raise SizeCapExceeded(f"weak annihilator family capped at order {cap}")
    singles = {weak_annihilator(R, [x]) for x in R.elements}
    fam = {frozenset(R.elements)}
    frontier = set(fam)
    while frontier:
        new = set()
        for A in frontier:
            for B in singles:
                C = A & B
                if C not in fam:
                    new.add(C)
        fam |= new
        frontier = new
    return fam


def weak_annihilator_family_bruteforce(R: FiniteRing, cap: int = 16) -> set[frozenset]:
    """Same family by running over all ``2^|R|`` subsets."""
    if R.order > cap:
        raise SizeCapExceeded(f"subset enumeration capped at order {cap}")
    nil = nilpotency_indices(R) > 0
    col = [nil[R.mul[x]] for x in R.elements]
    fam = set()
    for bits in range(1 << R.order):
        ok = np.ones(R.order, dtype=bool)
        for x in R.elements:
            if bits >> x & 1:
                ok &= col[x]
        fam.add(frozenset(int(a) for a in np.flatnonzero(ok)))
    return fam


def right_ideal_generated(R: FiniteRing, s: int) -> frozenset:
    return frozenset(int(x) for x in np.unique(R.mul[s]))


def nilpotent_pp_certificate(R: FiniteRing) -> tuple[bool, dict]:
    """Decide whether each ``N_R(q)``, q not nilpotent, equals ``sR`` for a nilpotent s.

    Returns ``(flag, certificate)``; the certificate maps each q to its s, or
    on failure holds only the first failing q mapped to ``None``.
    """
    nil = sorted(nilpotents(R))
    principal = {s: right_ideal_generated(R, s) for s in nil}
    cert = {}
    for q in R.elements:
        if q in principal:
            continue
        target = weak_annihilator(R, [q])
        s = next((s for s in nil if principal[s] == target), None)
        if s is None:
            return False, {q: None}
        cert[q] = s
    return True, cert


def is_nilpotent_pp(R: FiniteRing) -> bool:
    return nilpotent_pp_certificate(R)[0]


def is_chain_ring(R: FiniteRing) -> bool:
    """Ideals totally ordered by inclusion (commutative case: uniserial)."""
    ideals = enumerate_ideals(R)
    return all(a.members <= b.members for a, b in zip(ideals, ideals[1:]))
