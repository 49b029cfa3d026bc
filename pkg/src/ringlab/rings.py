"""Finite rings given by exact operation tables.

Every ring lives on the index set ``0..order-1``.  Addition and
multiplication are ``order x order`` integer tables, so all arithmetic is a
table lookup.  Rings are treated as immutable values.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

TABLE_CAP = 4096
IDEAL_CAP = 64


class RingError(ValueError):
    """Raised when a ring, ideal or map fails its structural invariants."""


class SizeCapExceeded(RingError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before reaching an answer."""


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.int32)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteRing:
    order: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    zero: int
    one: int
    labels: tuple
    name: str = ""
    # construction metadata (matrix shape, product factors, ...); not serialized
    structure: object = field(default=None, repr=False)

    def __repr__(self):
        return f"FiniteRing({self.name or '?'}, order={self.order})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of {self.name}") from None

    @property
    def _label_index(self) -> dict:
        cache = self.__dict__.get("_li")
        if cache is None:
            cache = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_li", cache)
        return cache

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def power(self, x: int, k: int) -> int:
        r = self.one
        for _ in range(k):
            r = int(self.mul[r, x])
        return r

    def sum(self, xs: Iterable[int]) -> int:
        s = self.zero
        for x in xs:
            s = int(self.add[s, x])
        return s

    def multiple(self, k: int, x: int) -> int:
        """``k * x`` for an integer ``k`` (negative allowed)."""
        if k < 0:
            return self.multiple(-k, int(self.neg[x]))
        s = self.zero
        for _ in range(k):
            s = int(self.add[s, x])
        return s

    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def units(self) -> list[int]:
        out = []
        for x in self.elements:
            right = np.flatnonzero(self.mul[x] == self.one)
            if any(self.mul[y, x] == self.one for y in right):
                out.append(x)
        return out

    def inverse(self, x: int) -> int | None:
        for y in np.flatnonzero(self.mul[x] == self.one):
            if self.mul[y, x] == self.one:
                return int(y)
        return None

    def additive_order(self, x: int) -> int:
        k, s = 1, x
        while s != self.zero:
            s = int(self.add[s, x])
            k += 1
        return k

    def same_tables(self, other: FiniteRing) -> bool:
        return (
            self.order == other.order
            and self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
            "zero": self.zero,
            "one": self.one,
            "labels": list(self.labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> FiniteRing:
        return make_ring(d["add"], d["mul"], d["zero"], d["one"], d["labels"], d["name"])

    @classmethod
    def from_json(cls, text: str) -> FiniteRing:
        return cls.from_dict(json.loads(text))


def make_ring(add, mul, zero: int, one: int, labels: Sequence | None = None,
              name: str = "", structure=None) -> FiniteRing:
    """Assemble a ring from raw tables; negation is read off the add table."""
    add = _frozen(add)
    mul = _frozen(mul)
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise RingError("tables must be square and of equal size")
    if n > TABLE_CAP:
        raise SizeCapExceeded(f"order {n} exceeds table cap {TABLE_CAP}")
    neg = np.empty(n, dtype=np.int32)
    for x in range(n):
        hits = np.flatnonzero(add[x] == zero)
        if len(hits) != 1:
            raise RingError(f"element {x} has {len(hits)} additive inverses")
        neg[x] = hits[0]
    neg.setflags(write=False)
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = tuple(str(s) for s in labels)
    if len(set(labels)) != n:
        raise RingError("labels must be distinct")
    return FiniteRing(n, add, mul, neg, int(zero), int(one), labels, name, structure)


def make_zmod(n: int) -> FiniteRing:
    if n < 1:
        raise RingError("Z_n needs n >= 1")
    r = np.arange(n)
    return make_ring((r[:, None] + r[None, :]) % n, (r[:, None] * r[None, :]) % n,
                     0, 1 % n, name=f"z{n}")


# -- axiom checking ---------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple

    def __str__(self):
        return f"{self.law} fails at {self.witness}"


def _first_triple(mask: np.ndarray, offset: int = 0) -> tuple:
    a, b, c = np.unravel_index(int(np.argmax(mask)), mask.shape)
    return (int(a) + offset, int(b), int(c))


def check_ring_axioms(R: FiniteRing) -> list[Violation]:
    """Scan the full tables and report every violated ring law.

    Each law is reported once, with its lexicographically smallest witness.
    """
    n, A, M, z, o = R.order, R.add, R.mul, R.zero, R.one
    out: list[Violation] = []
    if n > 1 and z == o:
        out.append(Violation("zero != one", (z,)))
    if not (A == A.T).all():
        i, j = np.argwhere(A != A.T)[0]
        out.append(Violation("add commutative", (int(i), int(j))))
    if not (A[z] == np.arange(n)).all():
        out.append(Violation("additive identity", (int(np.argmax(A[z] != np.arange(n))),)))
    if not (M[o] == np.arange(n)).all() or not (M[:, o] == np.arange(n)).all():
        bad = np.flatnonzero((M[o] != np.arange(n)) | (M[:, o] != np.arange(n)))
        out.append(Violation("multiplicative identity", (int(bad[0]),)))
    if not (A[np.arange(n), R.neg] == z).all():
        out.append(Violation("additive inverse", (int(np.argmax(A[np.arange(n), R.neg] != z)),)))

    # chunk the first coordinate so that order-4096 rings stay within memory
    chunk = max(1, 2_000_000 // (n * n))
    c = np.arange(n)[None, None, :]
    # each law maps a chunk of first arguments a to a mask over (a, b, c)
    laws = {
        "add associative": lambda a: A[A[a][:, :, None], c] != A[a[:, None, None], A[None]],
        "mul associative": lambda a: M[M[a][:, :, None], c] != M[a[:, None, None], M[None]],
        "left distributive": lambda a: M[a[:, None, None], A[None]]
        != A[M[a][:, :, None], M[a][:, None, :]],
        "right distributive": lambda a: M[A[a][:, :, None], c]
        != A[M[a][:, None, :], M[None]],
    }
    for law, fn in laws.items():
        for start in range(0, n, chunk):
            a = np.arange(start, min(n, start + chunk))
            bad = fn(a)
            if bad.any():
                out.append(Violation(law, _first_triple(bad, start)))
                break
    return out


# -- ideals -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteRing
    members: frozenset

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring is other.ring and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def sorted(self) -> tuple:
        return tuple(sorted(self.members))

    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def __repr__(self):
        return f"Ideal({self.ring.name}, {self.sorted()})"


def ideal_violation(R: FiniteRing, members) -> str | None:
    """Return a description of the first broken ideal law, or ``None``."""
    m = np.zeros(R.order, dtype=bool)
    idx = np.array(sorted(members), dtype=np.int64)
    m[idx] = True
    if not m[R.zero]:
        return "zero missing"
    if not m[R.neg[idx]].all():
        return "not closed under negation"
    if not m[R.add[np.ix_(idx, idx)]].all():
        return "not closed under addition"
    if not m[R.mul[:, idx]].all():
        return "does not absorb left multiplication"
    if not m[R.mul[idx, :]].all():
        return "does not absorb right multiplication"
    return None


def make_ideal(R: FiniteRing, members) -> Ideal:
    why = ideal_violation(R, members)
    if why:
        raise RingError(f"not an ideal of {R.name}: {why}")
    return Ideal(R, frozenset(int(x) for x in members))


def additive_closure(R: FiniteRing, gens: Iterable[int]) -> np.ndarray:
    """Boolean mask of the additive subgroup generated by ``gens``."""
    m = np.zeros(R.order, dtype=bool)
    m[R.zero] = True
    for g in sorted(set(int(x) for x in gens)):
        if m[g]:
            continue
        # H + <g> = union of H + k g
        cur = np.flatnonzero(m)
        layer = cur
        while True:
            layer = R.add[layer, g]
            if m[layer].all():
                break
            m[layer] = True
    return m


def principal_ideal(R: FiniteRing, x: int) -> np.ndarray:
    prods = R.mul[R.mul[:, x][:, None], np.arange(R.order)[None, :]]
    return additive_closure(R, np.unique(prods))


def ideal_sum(R: FiniteRing, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ia, ib = np.flatnonzero(a), np.flatnonzero(b)
    m = np.zeros(R.order, dtype=bool)
    m[np.unique(R.add[np.ix_(ia, ib)])] = True
    return m


def enumerate_ideals(R: FiniteRing, cap: int = IDEAL_CAP) -> list[Ideal]:
    """All two-sided ideals, sorted by size then by sorted member tuple.

    Principal ideals are generated first, then the family is closed under
    pairwise sums; every ideal of a finite ring is a finite sum of principal
    ones, so the fixpoint is the whole lattice.
    """
    if R.order > cap:
        raise SizeCapExceeded(
            f"ideal enumeration capped at order {cap} (got {R.order}); "
            "use radicals.lower_nilradical_msequence instead")
    found: dict[bytes, np.ndarray] = {}
    for x in R.elements:
        p = principal_ideal(R, x)
        found.setdefault(p.tobytes(), p)
    frontier = list(found.values())
    while frontier:
        new = []
        current = list(found.values())
        for a in frontier:
            for b in current:
                s = ideal_sum(R, a, b)
                key = s.tobytes()
                if key not in found:
                    found[key] = s
                    new.append(s)
        frontier = new
    ideals = [Ideal(R, frozenset(int(i) for i in np.flatnonzero(m))) for m in found.values()]
    ideals.sort(key=lambda I: (len(I), I.sorted()))
    return ideals


# -- maps -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RingMap:
    source: FiniteRing
    target: FiniteRing
    table: tuple

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __repr__(self):
        return f"RingMap({self.source.name} -> {self.target.name})"

    def image(self, xs: Iterable[int]) -> set:
        return {self.table[x] for x in xs}

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.table) == self.target.order

    def compose(self, first: RingMap) -> RingMap:
        """``self o first``."""
        if first.target is not self.source:
            raise RingError("maps do not compose")
        return RingMap(first.source, self.target, tuple(self.table[x] for x in first.table))

    def power(self, k: int) -> RingMap:
        if self.source is not self.target:
            raise RingError("only endomorphisms have powers")
        t = tuple(range(self.source.order))
        for _ in range(k):
            t = tuple(self.table[x] for x in t)
        return RingMap(self.source, self.source, t)

    def violations(self, unital: bool = True) -> list[str]:
        S, T = self.source, self.target
        f = np.asarray(self.table)
        out = []
        if len(f) != S.order or (len(f) and (f.min() < 0 or f.max() >= T.order)):
            return ["table is not a map between the carriers"]
        if f[S.zero] != T.zero:
            out.append("zero not preserved")
        if unital and f[S.one] != T.one:
            out.append("one not preserved")
        if not (f[S.add] == T.add[f[:, None], f[None, :]]).all():
            out.append("addition not preserved")
        if not (f[S.mul] == T.mul[f[:, None], f[None, :]]).all():
            out.append("multiplication not preserved")
        return out

    def is_homomorphism(self, unital: bool = True) -> bool:
        return not self.violations(unital)


def identity_map(R: FiniteRing) -> RingMap:
    return RingMap(R, R, tuple(range(R.order)))


def make_ring_map(source: FiniteRing, target: FiniteRing, table, unital: bool = True) -> RingMap:
    m = RingMap(source, target, tuple(int(x) for x in table))
    bad = m.violations(unital)
    if bad:
        raise RingError(f"not a ring map {source.name} -> {target.name}: {', '.join(bad)}")
    return m


# -- constructions on rings --------------------------------------------------

def _mixed_radix(orders: Sequence[int]) -> np.ndarray:
    """All index tuples, first coordinate most significant."""
    grids = np.indices(tuple(orders)).reshape(len(orders), -1)
    return grids.T


def encode_tuples(digits: np.ndarray, orders: Sequence[int]) -> np.ndarray:
    idx = np.zeros(digits.shape[:-1], dtype=np.int64)
    for k, o in enumerate(orders):
        idx = idx * o + digits[..., k]
    return idx


def direct_product(Rs: Sequence[FiniteRing], name: str | None = None) -> FiniteRing:
    if not Rs:
        raise RingError("direct product of an empty list")
    orders = [R.order for R in Rs]
    total = int(np.prod(orders))
    if total > TABLE_CAP:
        raise SizeCapExceeded(f"product order {total} exceeds cap {TABLE_CAP}")
    if len(Rs) == 1:
        R = Rs[0]
        return make_ring(R.add, R.mul, R.zero, R.one, R.labels, name or R.name)
    tup = _mixed_radix(orders)
    add = np.stack([R.add[tup[:, None, k], tup[None, :, k]] for k, R in enumerate(Rs)], -1)
    mul = np.stack([R.mul[tup[:, None, k], tup[None, :, k]] for k, R in enumerate(Rs)], -1)
    zero = int(encode_tuples(np.array([R.zero for R in Rs]), orders))
    one = int(encode_tuples(np.array([R.one for R in Rs]), orders))
    labels = ["(" + ",".join(R.labels[t[k]] for k, R in enumerate(Rs)) + ")" for t in tup]
    return make_ring(encode_tuples(add, orders), encode_tuples(mul, orders), zero, one, labels,
                     name or "x".join(R.name for R in Rs), structure=("product", tuple(Rs)))


def projection(P: FiniteRing, Rs: Sequence[FiniteRing], k: int) -> RingMap:
    """Projection of ``direct_product(Rs)`` onto its ``k``-th factor."""
    tup = _mixed_radix([R.order for R in Rs])
    return RingMap(P, Rs[k], tuple(int(t[k]) for t in tup))


def quotient(R: FiniteRing, I: Ideal, name: str | None = None) -> tuple[FiniteRing, RingMap]:
    """``R/I`` together with the projection.

    Cosets are numbered in order of their smallest representative, so the
    smallest preimage of quotient element ``q`` is increasing in ``q``.
    """
    why = ideal_violation(R, I.members)
    if why:
        raise RingError(f"cannot form quotient: {why}")
    members = np.array(sorted(I.members))
    coset_of = np.full(R.order, -1, dtype=np.int64)
    reps = []
    for x in R.elements:
        if coset_of[x] < 0:
            coset_of[R.add[x, members]] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    add = coset_of[R.add[np.ix_(reps, reps)]]
    mul = coset_of[R.mul[np.ix_(reps, reps)]]
    labels = [f"[{R.labels[r]}]" for r in reps]
    Q = make_ring(add, mul, int(coset_of[R.zero]), int(coset_of[R.one]), labels,
                  name or f"{R.name}/I")
    return Q, RingMap(R, Q, tuple(int(c) for c in coset_of))


def closure_mask(R: FiniteRing, gens: Iterable[int], with_one: bool = False) -> np.ndarray:
    m = np.zeros(R.order, dtype=bool)
    m[R.zero] = True
    m[list(gens)] = True
    if with_one:
        m[R.one] = True
    while True:
        idx = np.flatnonzero(m)
        new = m.copy()
        new[R.add[np.ix_(idx, idx)].ravel()] = True
        new[R.mul[np.ix_(idx, idx)].ravel()] = True
        new[R.neg[idx]] = True
        if (new == m).all():
            return m
        m = new


def subring_from_mask(R: FiniteRing, m: np.ndarray, name: str = "") -> tuple[FiniteRing, RingMap]:
    """Re-index a multiplicatively closed subset that contains the identity."""
    idx = np.flatnonzero(m)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    add = pos[R.add[np.ix_(idx, idx)]]
    mul = pos[R.mul[np.ix_(idx, idx)]]
    if (add < 0).any() or (mul < 0).any():
        raise RingError("subset is not closed under the ring operations")
    if pos[R.one] < 0:
        raise RingError("subset does not contain the identity")
    S = make_ring(add, mul, int(pos[R.zero]), int(pos[R.one]),
                  [R.labels[i] for i in idx], name or f"sub({R.name})")
    return S, RingMap(S, R, tuple(int(i) for i in idx))


def subring_generated(R: FiniteRing, gens: Iterable[int], with_one: bool = True,
                      name: str = "") -> tuple[FiniteRing, RingMap]:
    """Smallest subset containing ``gens`` closed under +, -, and *.

    Without ``with_one`` the result may be a ring without identity (e.g.
    ``{0, 4, 8}`` in Z_12).  Its ``one`` is then the multiplicative identity of
    the subset if it has one, else ``zero`` is reported with ``name`` marking
    it as a rng; check_ring_axioms will flag that case.
    """
    m = closure_mask(R, gens, with_one)
    idx = np.flatnonzero(m)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    add = pos[R.add[np.ix_(idx, idx)]]
    mul = pos[R.mul[np.ix_(idx, idx)]]
    one = int(pos[R.one]) if m[R.one] else None
    if one is None:
        # a rng may still have its own identity, e.g. {0, 3} in Z_6
        for j in range(len(idx)):
            if (mul[j] == np.arange(len(idx))).all() and (mul[:, j] == np.arange(len(idx))).all():
                one = j
                break
    if one is None:
        one = int(pos[R.zero])
    S = make_ring(add, mul, int(pos[R.zero]), one, [R.labels[i] for i in idx],
                  name or f"<{','.join(R.labels[g] for g in sorted(set(gens)))}>")
    return S, RingMap(S, R, tuple(int(i) for i in idx))


# -- isomorphism search -----------------------------------------------------

def _element_signature(R: FiniteRing, x: int) -> tuple:
    # invariants preserved by every ring isomorphism
    powers = [x]
    while len(powers) <= R.order:
        nxt = int(R.mul[powers[-1], x])
        if nxt in powers:
            tail = powers.index(nxt)
            break
        powers.append(nxt)
    centre = bool((R.mul[x] == R.mul[:, x]).all())
    zd = int(np.count_nonzero(R.mul[x] == R.zero))
    return (R.additive_order(x), len(powers), tail, centre, zd)


def ring_generators(R: FiniteRing) -> list[int]:
    """A small generating set (with identity), chosen greedily by index."""
    gens: list[int] = []
    m = closure_mask(R, [], with_one=True)
    # prefer elements with large closures so the set stays short
    while not m.all():
        best, best_size = None, -1
        for x in np.flatnonzero(~m):
            size = int(closure_mask(R, gens + [int(x)], True).sum())
            if size > best_size:
                best, best_size = int(x), size
            if size == R.order:
                break
        gens.append(best)
        m = closure_mask(R, gens, True)
    return gens


def find_isomorphism(R: FiniteRing, S: FiniteRing, budget: int = 200_000) -> RingMap | None:
    """Search for a ring isomorphism ``R -> S``.

    Backtracks over images of a generating set; every partial assignment is
    propagated through sums and products and pruned on the first conflict.
    Raises SearchBudgetExceeded when more than ``budget`` extension steps are
    needed, which is distinct from returning ``None`` (no isomorphism).
    """
    if R.order != S.order:
        return None
    if sorted(R.additive_order(x) for x in R.elements) != sorted(
            S.additive_order(y) for y in S.elements):
        return None
    sig_r = [_element_signature(R, x) for x in R.elements]
    sig_s = [_element_signature(S, y) for y in S.elements]
    if sorted(sig_r) != sorted(sig_s):
        return None
    gens = ring_generators(R)
    steps = [0]

    def propagate(phi: dict) -> dict | None:
        phi = dict(phi)
        frontier = list(phi)
        while frontier:
            new = []
            known = list(phi)
            for x in frontier:
                for y in known:
                    for op_r, op_s in ((R.add, S.add), (R.mul, S.mul)):
                        for a, b in ((x, y), (y, x)):
                            z = int(op_r[a, b])
                            w = int(op_s[phi[a], phi[b]])
                            steps[0] += 1
                            if z in phi:
                                if phi[z] != w:
                                    return None
                            else:
                                phi[z] = w
                                new.append(z)
            if steps[0] > budget:
                raise SearchBudgetExceeded("isomorphism search budget exhausted")
            frontier = new
        if len(set(phi.values())) != len(phi):
            return None
        return phi

    def extend(k: int, phi: dict) -> dict | None:
        if k == len(gens):
            return phi
        g = gens[k]
        if g in phi:
            return extend(k + 1, phi)
        used = set(phi.values())
        for y in S.elements:
            if y in used or sig_s[y] != sig_r[g]:
                continue
            trial = dict(phi)
            trial[g] = y
            out = propagate(trial)
            if out is not None:
                res = extend(k + 1, out)
                if res is not None:
                    return res
        return None

    base = propagate({R.zero: S.zero, R.one: S.one})
    if base is None:
        return None
    phi = extend(0, base)
    if phi is None or len(phi) != R.order:
        return None
    m = RingMap(R, S, tuple(phi[x] for x in R.elements))
    return m if m.is_homomorphism() and m.is_bijective() else None


# -- localization -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Localization:
    """``S^-1 R`` for a finite ring, realised on the carrier of ``R``.

    Every regular element of a finite ring is a unit, so the fraction
    ``u^-1 a`` is an ordinary product and the canonical map is the identity.
    ``collapsed`` records that no new elements were adjoined.
    """
    ring: FiniteRing
    canonical: RingMap
    inverses: dict = field(repr=False)
    collapsed: bool = True

    def fraction(self, u: int, a: int) -> int:
        return int(self.ring.mul[self.inverses[u], a])


def is_regular(R: FiniteRing, s: int) -> bool:
    row = R.mul[s] == R.zero
    col = R.mul[:, s] == R.zero
    row[R.zero] = col[R.zero] = False
    return not row.any() and not col.any()


def localization(R: FiniteRing, S: Iterable[int]) -> Localization:
    S = set(int(s) for s in S)
    if R.one not in S:
        raise RingError("S must contain the identity")
    for s in sorted(S):
        for t in sorted(S):
            if int(R.mul[s, t]) not in S:
                raise RingError(f"S is not multiplicatively closed: {R.labels[s]}*{R.labels[t]}")
    for s in sorted(S):
        if not (R.mul[s] == R.mul[:, s]).all():
            raise RingError(f"{R.labels[s]} is not central")
        if not is_regular(R, s):
            raise RingError(f"{R.labels[s]} is a zero divisor, not regular")
    inverses = {}
    for s in sorted(S):
        inv = R.inverse(s)
        # pigeonhole: left multiplication by a regular element is a bijection
        assert inv is not None, "regular element without inverse in a finite ring"
        inverses[s] = inv
    return Localization(R, identity_map(R), inverses, True)


def all_tuples(orders: Sequence[int]) -> Iterable[tuple]:
    return itertools.product(*(range(o) for o in orders))
