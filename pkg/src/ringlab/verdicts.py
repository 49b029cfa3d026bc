"""Bounded exhaustive deciders for Armendariz-type conditions relative to a monoid.

For a variant with target set ``T`` and conclusion set ``C`` the search
visits every ordered pair ``(alpha, beta)`` of elements with support in a
fragment, alpha outer and beta inner, both in lexicographic order of their
coefficient vectors (first fragment element most significant).  A pair fails
when every coefficient of ``alpha beta`` lies in ``T`` while some
``a_i b_j`` lies outside ``C``.

When ``T = C = J`` is an ideal the condition only depends on images in
``R/J``, where it becomes ``alpha beta = 0 => a_i b_j = 0``.  Cosets are
numbered by smallest representative, so the first failing pair over
``R/J`` lifts through smallest representatives to the first failing pair
over ``R``.
"""

from __future__ import annotations

import json
import weakref
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .monoid_ring import (MonoidRingElement, coefficients_in, element_from_coefficients,
                          finite_monoid_ring, format_element, multiply)
from .monoids import (FreeCommutative, Monoid, MonoidFragment, as_table)
from .radicals import (is_nilpotent_pp, is_semicommutative, lower_nilradical_msequence,
                       nilpotents, upper_nilradical)
from .rings import FiniteRing, Ideal, SearchBudgetExceeded, ideal_violation, quotient

HOLDS = "HoldsUpToBounds"
FAILS = "Fails"

VARIANTS = {
    "armendariz": "M-Armendariz",
    "nil": "NilMArmendariz",
    "lower-nil": "LowerNilMArmendariz",
    "upper-nil": "UpperNilMArmendariz",
}

DEFAULT_BUDGET = 100_000_000


# rings are immutable, so per-ring derived data is cached by identity
_CACHE: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _cached(R: FiniteRing, key, compute):
    slot = _CACHE.setdefault(R, {})
    if key not in slot:
        slot[key] = compute()
    return slot[key]


def target_set(R: FiniteRing, variant: str) -> frozenset:
    if variant == "armendariz":
        return frozenset([R.zero])
    if variant == "nil":
        return _cached(R, "nil", lambda: nilpotents(R))
    if variant == "lower-nil":
        return _cached(R, "lower-nil", lambda: lower_nilradical_msequence(R))
    if variant == "upper-nil":
        return _cached(R, "upper-nil", lambda: upper_nilradical(R))
    raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(VARIANTS)}")


def _reduction(R: FiniteRing, T: frozenset):
    """Tables of ``R/T`` with the smallest representative of each coset."""
    def compute():
        Q, proj = quotient(R, Ideal(R, T), f"{R.name}/J")
        table = np.asarray(proj.table)
        reps = np.full(Q.order, -1, dtype=np.int64)
        for x in range(R.order - 1, -1, -1):
            reps[table[x]] = x
        return Q, reps
    return _cached(R, ("quotient", T), compute)


@dataclass
class Verdict:
    property: str
    variant: str
    ring: FiniteRing
    fragment: MonoidFragment
    outcome: str
    alpha: MonoidRingElement | None = None
    beta: MonoidRingElement | None = None
    i: object = None
    j: object = None
    target: frozenset = field(default=frozenset(), repr=False)
    pairs: int = 0
    cells: int = 0
    method: str = ""

    @property
    def fails(self) -> bool:
        return self.outcome == FAILS

    @property
    def product(self) -> MonoidRingElement | None:
        if self.alpha is None:
            return None
        return multiply(self.alpha, self.beta)

    @property
    def coefficient_product(self) -> int | None:
        if self.alpha is None:
            return None
        return int(self.ring.mul[self.alpha.coefficient(self.i), self.beta.coefficient(self.j)])

    def reverify(self) -> bool:
        """Recompute the witness from scratch: ``alpha beta`` in ``T[M]``, ``a_i b_j`` outside."""
        if not self.fails:
            return False
        T = target_set(self.ring, self.variant)
        return coefficients_in(self.product, T) and self.coefficient_product not in T

    def to_dict(self) -> dict:
        M = self.fragment.monoid
        d = {
            "property": self.property,
            "bounds": {"ring": self.ring.name, "ring_order": self.ring.order,
                       "monoid": M.name, "fragment": self.fragment.bound,
                       "fragment_size": len(self.fragment)},
            "outcome": self.outcome,
        }
        if self.fails:
            d["witness"] = {
                "alpha": format_element(self.alpha),
                "beta": format_element(self.beta),
                "alpha_beta": format_element(self.product),
                "i": M.format(self.i),
                "j": M.format(self.j),
                "a_i": self.ring.label(self.alpha.coefficient(self.i)),
                "b_j": self.ring.label(self.beta.coefficient(self.j)),
                "a_i_b_j": self.ring.label(self.coefficient_product),
            }
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- search kernel ----------------------------------------------------------

def _product_layout(fragment: MonoidFragment) -> list[list[tuple[int, int]]]:
    """Group fragment position pairs ``(i, j)`` by the ambient product ``g_i h_j``."""
    M = fragment.monoid
    groups: dict = {}
    for i, g in enumerate(fragment.elements):
        for j, h in enumerate(fragment.elements):
            groups.setdefault(M.op(g, h), []).append((i, j))
    return list(groups.values())


def _digits(q: int, k: int) -> np.ndarray:
    """All coordinate tuples as a ``(k, q^k)`` array, first coordinate most significant."""
    if k == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.indices((q,) * k).reshape(k, -1)


def _chunks(lo: int, hi: int, width: int, cap_cells: int = 2_000_000):
    """Alpha ranges growing geometrically, so early failures stay cheap."""
    n = 1
    start = lo
    limit = max(1, cap_cells // max(1, width))
    while start < hi:
        stop = min(hi, start + n)
        yield start, stop
        start = stop
        n = min(limit, 2 * n)


def _scan(add, mul, neg, tmask, cmask, layout, k, lo, hi, budget):
    """First failing ``(alpha, beta)`` with alpha index in ``[lo, hi)``; plain table scan.

    Returns ``(alpha_digits, beta_digits, pairs_decided, cells)``; digits are
    None when nothing fails in the range.
    """
    q = add.shape[0]
    nb = q ** k
    if nb > 1 << 21:
        raise SearchBudgetExceeded(f"beta space of {nb} elements is too large for a direct scan")
    B = _digits(q, k)
    cells = 0
    for start, stop in _chunks(lo, hi, nb):
        cells += (stop - start) * nb
        if cells > budget:
            raise SearchBudgetExceeded(
                f"budget of {budget} cells reached at alpha index {start} of {q ** k}")
        A = np.array(np.unravel_index(np.arange(start, stop), (q,) * k))   # (k, na)
        ok = np.ones((stop - start, nb), dtype=bool)
        for group in layout:
            i0, j0 = group[0]
            acc = mul[A[i0][:, None], B[j0][None, :]]
            for i, j in group[1:]:
                acc = add[acc, mul[A[i][:, None], B[j][None, :]]]
            ok &= tmask[acc]
            if not ok.any():
                break
        if not ok.any():
            continue
        ra, rb = np.nonzero(ok)
        # conclusion check only on the pairs passing the target test
        bad = np.zeros(len(ra), dtype=bool)
        for i in range(k):
            for j in range(k):
                bad |= ~cmask[mul[A[i][ra], B[j][rb]]]
        if bad.any():
            w = int(np.flatnonzero(bad)[0])
            decided = (start + int(ra[w]) - lo) * nb + int(rb[w]) + 1
            return (tuple(int(v) for v in A[:, ra[w]]), tuple(int(v) for v in B[:, rb[w]]),
                    decided, cells)
    return None, None, (hi - lo) * nb, cells


def _half_values(mul, add, zero, A, Bh, layout, cols, t):
    """Per target, ``sum a_i b_j`` over layout terms whose ``j`` lies in ``cols``.

    Left distributivity turns each target coordinate into ``sum_j s_j b_j``
    with ``s_j`` the sum of the matching ``a_i``, computed once per alpha.
    """
    q = add.shape[0]
    na, nh = A.shape[1], Bh.shape[1]
    mflat, aflat = mul.ravel(), add.ravel()
    vals = np.full((t, na, nh), zero, dtype=np.int64)
    for tau, group in enumerate(layout):
        by_j: dict = {}
        for i, j in group:
            if j in cols:
                by_j.setdefault(j, []).append(i)
        first = True
        for j, rows in by_j.items():
            sj = A[rows[0]]
            for i in rows[1:]:
                sj = add[sj, A[i]]
            term = np.take(mflat, (sj * q)[:, None] + Bh[cols[j]][None, :])
            vals[tau] = term if first else np.take(aflat, vals[tau] * q + term)
            first = False
    return vals


def _bad_mask(mul, cmask, A, Bh):
    """``True`` where some ``a_i b_j`` leaves the conclusion set."""
    q = mul.shape[0]
    good = np.ones((A.shape[1], q), dtype=bool)
    for i in range(A.shape[0]):
        good &= cmask[mul[A[i]]]
    gflat = good.ravel()
    offs = (np.arange(A.shape[1]) * q)[:, None]
    bad = np.zeros((A.shape[1], Bh.shape[1]), dtype=bool)
    for j in range(Bh.shape[0]):
        bad |= ~np.take(gflat, offs + Bh[j][None, :])
    return bad


def _dense_keys(vals: np.ndarray, q: int) -> np.ndarray:
    """Dense integer ids of value vectors (first axis) without overflow."""
    ids = np.zeros(vals.shape[1:], dtype=np.int64)
    for v in vals:
        _, ids = np.unique(ids * q + v, return_inverse=True)
        ids = ids.reshape(vals.shape[1:])
    return ids


def _first_per_key(keys: np.ndarray, idx: np.ndarray):
    order = np.argsort(keys, kind="stable")
    uniq, first = np.unique(keys[order], return_index=True)
    return uniq, idx[order][first]


def _lookup(uniq, best, keys):
    if len(uniq) == 0:
        return np.full(keys.shape, -1, dtype=np.int64)
    pos = np.clip(np.searchsorted(uniq, keys), 0, len(uniq) - 1)
    return np.where(uniq[pos] == keys, best[pos], -1)


def _split_scan(add, mul, neg, tmask, cmask, layout, k, lo, hi, budget):
    """Same contract as ``_scan`` for the target set ``{0}``.

    ``beta`` splits into a leading and a trailing block of coordinates, and
    ``alpha beta = 0`` iff the two partial products are negatives of each
    other.  For every alpha row and every leading block the smallest
    matching trailing block (with a bad coordinate when the leading block
    has none) is found by a sorted join, which preserves the lexicographic
    first witness.
    """
    q = add.shape[0]
    zero = int(np.flatnonzero(tmask)[0])
    # the trailing block is the one sorted, so keep it the smaller one
    k2 = k // 2
    k1 = k - k2
    if q ** k2 > 1 << 21:
        raise SearchBudgetExceeded(f"split blocks of {q ** k2} cells per alpha are too large")
    B1, B2 = _digits(q, k1), _digits(q, k2)
    n1, n2 = B1.shape[1], B2.shape[1]
    if n1 + n2 > 1 << 21:
        raise SearchBudgetExceeded(f"split blocks of {n1} + {n2} cells per alpha are too large")
    cols1 = {j: j for j in range(k1)}
    cols2 = {j: j - k1 for j in range(k1, k)}
    t = len(layout)
    cells = 0
    for start, stop in _chunks(lo, hi, n1 + n2):
        na = stop - start
        cells += na * (n1 + n2)
        if cells > budget:
            raise SearchBudgetExceeded(
                f"budget of {budget} cells reached at alpha index {start} of {q ** k}")
        A = np.array(np.unravel_index(np.arange(start, stop), (q,) * k))   # (k, na)
        v1 = _half_values(mul, add, zero, A, B1, layout, cols1, t)
        v2 = neg[_half_values(mul, add, zero, A, B2, layout, cols2, t)]
        both = np.concatenate([v1.reshape(t, -1), v2.reshape(t, -1)], axis=1)
        if q ** t * na < 1 << 62:
            span = q ** t
            ids = np.zeros(both.shape[1], dtype=np.int64)
            for v in both[::-1]:
                ids = ids * q + v
        else:
            ids = _dense_keys(both, q)
            span = int(ids.max()) + 1
        rows1 = np.repeat(np.arange(na), n1)
        rows2 = np.repeat(np.arange(na), n2)
        key1 = (rows1 * span + ids[:na * n1]).reshape(na, n1)
        key2 = rows2 * span + ids[na * n1:]
        bad1 = _bad_mask(mul, cmask, A, B1)
        bad2 = _bad_mask(mul, cmask, A, B2)
        idx2 = np.tile(np.arange(n2), na)
        uniq_all, best_all = _first_per_key(key2, idx2)
        flat_bad2 = bad2.ravel()
        uniq_bad, best_bad = _first_per_key(key2[flat_bad2], idx2[flat_bad2])
        cand = np.where(bad1, _lookup(uniq_all, best_all, key1), _lookup(uniq_bad, best_bad, key1))
        hit = cand >= 0
        if not hit.any():
            continue
        r = int(np.flatnonzero(hit.any(axis=1))[0])
        c1 = int(np.flatnonzero(hit[r])[0])
        c2 = int(cand[r, c1])
        beta = tuple(int(v) for v in B1[:, c1]) + tuple(int(v) for v in B2[:, c2])
        decided = (start + r - lo) * n1 * n2 + c1 * n2 + c2 + 1
        return tuple(int(v) for v in A[:, r]), beta, decided, cells
    return None, None, (hi - lo) * n1 * n2, cells


def _scan_job(args):
    kernel, rest = args[0], args[1:]
    return kernel(*rest)


def _search(add, mul, neg, tmask, cmask, layout, k, jobs: int, budget: int,
            kernel_name: str = "auto"):
    q = add.shape[0]
    na = q ** k
    additive = tmask.sum() == 1 and k >= 2
    if kernel_name == "split" and not additive:
        raise ValueError("the split kernel needs the target set {0} and two or more coordinates")
    kernel = _split_scan if (additive and kernel_name != "scan") else _scan
    if jobs <= 1 or na < 2 * jobs:
        return kernel(add, mul, neg, tmask, cmask, layout, k, 0, na, budget)
    bounds = np.linspace(0, na, jobs + 1).astype(int)
    tasks = [(kernel, add, mul, neg, tmask, cmask, layout, k, int(lo), int(hi), budget // jobs)
             for lo, hi in zip(bounds[:-1], bounds[1:])]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        results = list(ex.map(_scan_job, tasks))
    # shards are in alpha order, so the first shard with a hit holds the global minimum
    decided = cells = 0
    for a, b, n, c in results:
        decided += n
        cells += c
        if a is not None:
            return a, b, decided, cells
    return None, None, decided, cells


def check_armendariz(R: FiniteRing, fragment: MonoidFragment, variant: str = "lower-nil",
                     budget: int = DEFAULT_BUDGET, jobs: int = 1,
                     reduce: bool = True, kernel: str = "auto") -> Verdict:
    """Decide the variant for all pairs with support in ``fragment``.

    ``budget`` bounds the table cells touched by the search kernel, not the
    logical pairs decided (reported as ``pairs``); exceeding it raises
    ``SearchBudgetExceeded``.
    """
    T = target_set(R, variant)
    k = len(fragment)
    layout = _product_layout(fragment)
    is_ideal = variant != "nil" or _cached(R, "nil-is-ideal", lambda: ideal_violation(R, T) is None)
    if reduce and is_ideal and len(T) > 1:
        Q, reps = _reduction(R, T)
        add, mul, neg = Q.add, Q.mul, Q.neg
        tmask = np.zeros(Q.order, dtype=bool)
        tmask[Q.zero] = True
        method = "quotient"
    else:
        add, mul, neg = R.add, R.mul, R.neg
        reps = np.arange(R.order)
        tmask = np.zeros(R.order, dtype=bool)
        tmask[list(T)] = True
        method = "direct"
    try:
        a, b, decided, cells = _search(np.asarray(add), np.asarray(mul), np.asarray(neg),
                                       tmask, tmask, layout, k, jobs, budget, kernel)
    except SearchBudgetExceeded as exc:
        raise SearchBudgetExceeded(
            f"{R.name} over {fragment.monoid.name} ({fragment.bound}): {exc}") from None
    v = Verdict(VARIANTS[variant], variant, R, fragment, HOLDS, target=T,
                pairs=decided, cells=cells, method=method)
    if a is None:
        return v
    a = [int(reps[x]) for x in a]
    b = [int(reps[x]) for x in b]
    v.outcome = FAILS
    v.alpha = element_from_coefficients(R, fragment, a)
    v.beta = element_from_coefficients(R, fragment, b)
    v.i, v.j = _first_offending(R, fragment, a, b, T)
    return v


def _first_offending(R, fragment, a, b, C):
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if int(R.mul[ai, bj]) not in C:
                return fragment.elements[i], fragment.elements[j]
    raise AssertionError("failing pair without an offending coefficient product")


def verdict_for_pair(R: FiniteRing, fragment: MonoidFragment, variant: str,
                     alpha: MonoidRingElement, beta: MonoidRingElement) -> Verdict:
    """Evaluate one given pair; outcome is Fails iff the pair is a violation."""
    T = target_set(R, variant)
    v = Verdict(VARIANTS[variant], variant, R, fragment, HOLDS, target=T, pairs=1, method="pair")
    if not coefficients_in(multiply(alpha, beta), T):
        return v
    for g, ai in alpha.terms:
        for h, bj in beta.terms:
            if int(R.mul[ai, bj]) not in T:
                v.outcome = FAILS
                v.alpha, v.beta, v.i, v.j = alpha, beta, g, h
                return v
    return v


def finite_order_witness(R: FiniteRing, M: Monoid, g, n: int) -> tuple:
    """``alpha = sum_{i<n} g^i`` and ``beta = e - g``; their product is 0."""
    alpha = MonoidRingElement.from_terms(R, M, [(R.one, M.power(g, i)) for i in range(n)])
    beta = MonoidRingElement.from_terms(R, M, [(R.one, M.identity), (int(R.neg[R.one]), g)])
    return alpha, beta


# -- the 2x2 matrix example -------------------------------------------------

def check_M2_counterexample(R: FiniteRing) -> Verdict:
    """``alpha = E12 e - E11 g``, ``beta = (E11+E12) e + (E21+E22) g`` in ``M_2(R)[x]``.

    The designated product is ``a_e b_g = E12 (E21 + E22) = E11 + E12``, a
    nonzero idempotent.
    """
    from .constructions import full_matrix

    M2 = full_matrix(R, 2)
    shape = M2.structure
    o, z = R.one, R.zero

    def mat(rows):
        return shape.index_of(np.array(rows))

    e11_e12 = mat([[o, o], [z, z]])
    e21_e22 = mat([[z, z], [o, o]])
    e12 = mat([[z, o], [z, z]])
    m_e11 = mat([[int(R.neg[o]), z], [z, z]])
    nat = FreeCommutative(1)
    frag = nat.fragment(1)
    e, g = frag.elements
    alpha = MonoidRingElement.from_terms(M2, nat, [(e12, e), (m_e11, g)])
    beta = MonoidRingElement.from_terms(M2, nat, [(e11_e12, e), (e21_e22, g)])
    v = verdict_for_pair(M2, frag, "lower-nil", alpha, beta)
    if v.fails:
        v.i, v.j = e, g
    return v


def is_idempotent(R: FiniteRing, x: int) -> bool:
    return int(R.mul[x, x]) == x


# -- transport --------------------------------------------------------------

def witness_transport_submonoid(V: Verdict, M: Monoid, embed, fragment: MonoidFragment | None = None,
                                check_pairs=None) -> Verdict:
    """Carry a failure over ``N`` into ``R[M]`` along ``embed`` and re-verify.

    ``embed`` maps elements of ``N`` to ``M`` (callable or dict).  It must be
    injective and multiplicative on the witness support.
    """
    if not V.fails:
        raise ValueError("only failing verdicts can be transported")
    f = embed if callable(embed) else embed.__getitem__
    N = V.fragment.monoid
    support = sorted(set(V.alpha.support) | set(V.beta.support)
                     | {N.op(g, h) for g in V.alpha.support for h in V.beta.support}
                     | {N.identity}, key=N.key)
    try:
        images = [f(g) for g in support]
    except (KeyError, TypeError) as exc:
        raise ValueError("embedding missing for a support element") from exc
    if len(set(images)) != len(images) or f(N.identity) != M.identity:
        raise ValueError("embedding is not injective or not unital")
    for g in support:
        for h in support:
            gh = N.op(g, h)
            if gh in support and f(gh) != M.op(f(g), f(h)):
                raise ValueError("embedding is not multiplicative on the witness support")
    R = V.ring
    alpha = MonoidRingElement.from_terms(R, M, [(a, f(g)) for g, a in V.alpha.terms])
    beta = MonoidRingElement.from_terms(R, M, [(b, f(h)) for h, b in V.beta.terms])
    if fragment is None:
        els = sorted(set(images), key=M.key)
        fragment = MonoidFragment(M, tuple(els), f"image of {N.name}")
    v = verdict_for_pair(R, fragment, V.variant, alpha, beta)
    return v


def transport_ring(V: Verdict, phi, target: FiniteRing) -> Verdict:
    """Apply a ring map coefficientwise to a witness and re-evaluate over ``target``."""
    M = V.fragment.monoid
    alpha = MonoidRingElement.from_terms(target, M, [(phi(a), g) for g, a in V.alpha.terms])
    beta = MonoidRingElement.from_terms(target, M, [(phi(b), h) for h, b in V.beta.terms])
    return verdict_for_pair(target, V.fragment, V.variant, alpha, beta)


# -- nilpotent p.p. transfer ------------------------------------------------

VACUOUS = "hypotheses-fail (vacuous)"
CONFIRMED = "hypotheses-hold-and-conclusion-holds"
REFUTATION = "REFUTATION"


@dataclass
class NilpotentPPReport:
    ring: str
    monoid: str
    semicommutative: bool
    lower_nil: bool
    ring_nilpotent_pp: bool
    monoid_ring_nilpotent_pp: bool | None
    status: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def check_nilpotent_pp_monoid_ring(R: FiniteRing, M: Monoid, budget: int = DEFAULT_BUDGET) -> NilpotentPPReport:
    """Evaluate "R nilpotent p.p., semicommutative, lower nil M-Armendariz => R[M] nilpotent p.p."."""
    els, _ = as_table(M)
    frag = MonoidFragment(M, tuple(els), "all")
    semi = is_semicommutative(R)
    lower = not check_armendariz(R, frag, "lower-nil", budget).fails
    pp = is_nilpotent_pp(R)
    if not (semi and lower and pp):
        return NilpotentPPReport(R.name, M.name, semi, lower, pp, None, VACUOUS)
    RM = finite_monoid_ring(R, M)
    conclusion = is_nilpotent_pp(RM)
    return NilpotentPPReport(R.name, M.name, semi, lower, pp, conclusion,
                             CONFIRMED if conclusion else REFUTATION)
