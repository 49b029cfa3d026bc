"""Executable theorem registry over the built-in catalog.

Every check has a stable id, a statement, an expected outcome and a list of
instances.  An instance evaluates to a record with an ``ok`` flag: for
implications ``ok`` means "not refuted at the stated bounds", for examples it
means "the expected witness was reproduced".  Reports contain no wall-clock
data unless timings are requested, so repeated runs are byte-identical.
"""

from __future__ import annotations

import fnmatch
import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import catalog as cat
from .constructions import (a_ring, b_ring, block_diagonal_embedding, diagonal_embedding,
                            direct_limit_chain, entry_projection, h3, radical_formula_check_H3,
                            radical_formula_check_skew, radical_formula_check_Tn, s_ring,
                            scalar_embedding, skew_poly_quotient_iso, skew_upper_triangular,
                            t_ring, t_ring_convolution, upper_triangular)
from .monoid_ring import (MonoidRingElement, finite_monoid_ring,
                          lift_ideal, skew_monoid_ring)
from .monoids import (FGAbelian, FreeWord, MonoidFragment, as_table, coproduct_monoid,
                      finite_order_element, is_cancellative, lex_order, monoid_ideal_check,
                      product_monoid, submonoid_fragment, up_violation_search)
from .radicals import (class_predicates, is_chain_ring, is_dedekind_finite, is_nilpotent_pp,
                       is_semicommutative, is_semicommutative_ideal, is_two_primal_rng,
                       lower_nilradical_msequence, lower_nilradical_primes, nilpotents,
                       upper_nilradical, weak_annihilator, weak_annihilator_family,
                       weak_annihilator_family_bruteforce)
from .rings import (FiniteRing, RingError, SearchBudgetExceeded, SizeCapExceeded, direct_product,
                    enumerate_ideals, find_isomorphism, localization, make_zmod, projection,
                    ring_generators, subring_generated)
from .verdicts import (FAILS, check_armendariz, check_M2_counterexample,
                       check_nilpotent_pp_monoid_ring, finite_order_witness, is_idempotent,
                       target_set, transport_ring, verdict_for_pair, witness_transport_submonoid)

PASS = "PASS"
WITNESS = "WITNESS"
DEVIATION = "DEVIATION"
SKIPPED = "SKIPPED"

CONFIRMED = "confirmed"
VACUOUS = "vacuous"
REFUTED = "refuted"

DEFAULT_CHECK_BUDGET = 50_000_000


@dataclass(frozen=True)
class Config:
    budget: int = DEFAULT_CHECK_BUDGET   # table cells per single verdict
    degree: int | None = None            # overrides the nat fragment degree
    jobs: int = 1

    def to_dict(self) -> dict:
        return {"budget": self.budget, "degree": self.degree}


@dataclass(frozen=True)
class Instance:
    label: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    expected: str
    evaluator: Callable
    instances: tuple

    def run(self, cfg: Config, timings: bool = False) -> dict:
        t0 = time.perf_counter()
        rows = []
        for inst in self.instances:
            try:
                rec = self.evaluator(cfg, **inst.params)
                status = "ok" if rec.pop("ok") else "deviation"
            except (SearchBudgetExceeded, SizeCapExceeded) as exc:
                rec, status = {"reason": str(exc)}, "skipped"
            rows.append({"instance": inst.label, "status": status, **rec})
        statuses = {r["status"] for r in rows}
        if "deviation" in statuses:
            outcome = DEVIATION
        elif "skipped" in statuses:
            outcome = SKIPPED
        else:
            outcome = self.expected
        out = {"id": self.id, "description": self.description, "expected": self.expected,
               "outcome": outcome, "instances": rows}
        if timings:
            out["wall_time"] = round(time.perf_counter() - t0, 3)
        return out


# -- shared helpers ---------------------------------------------------------

def nat_degree(R: FiniteRing, cfg: Config) -> int:
    if cfg.degree is not None:
        return cfg.degree
    return 3 if R.order <= 4 else 2


def nat_fragment(R: FiniteRing, cfg: Config) -> MonoidFragment:
    return cat.monoid("nat").fragment(nat_degree(R, cfg))


def full_fragment(name: str) -> MonoidFragment:
    M = cat.monoid(name)
    els, _ = as_table(M)
    return MonoidFragment(M, tuple(els), "all")


def fragment_for(R: FiniteRing, spec: str, cfg: Config) -> MonoidFragment:
    """``nat`` (default degree), ``nat:d``, ``nat2:d``, ``free2:d``, ``prod(..):d`` or a finite name."""
    name, _, bound = spec.partition(":")
    if name == "z":
        return FGAbelian([0]).fragment(int(bound or 1))
    if name == "nat" and not bound:
        return nat_fragment(R, cfg)
    M = cat.monoid(name)
    if bound:
        return M.fragment(int(bound))
    return full_fragment(name)


def verdict(R, frag, variant, cfg: Config):
    return check_armendariz(R, frag, variant, budget=cfg.budget)


def vrec(v) -> dict:
    d = v.to_dict()
    out = {"outcome": d["outcome"], "bounds": d["bounds"]}
    if v.fails:
        out["witness"] = d["witness"]
        out["canonical"] = {"alpha": [v.alpha.coefficient(g) for g in v.fragment.elements],
                            "beta": [v.beta.coefficient(g) for g in v.fragment.elements]}
    return out


def holds(v) -> bool:
    return not v.fails


def implication(hyp: bool, concl: bool) -> tuple[bool, str]:
    if not hyp:
        return True, VACUOUS
    return concl, CONFIRMED if concl else REFUTED


def two_primal(R) -> bool:
    return lower_nilradical_msequence(R) == nilpotents(R)


def catalog_names(max_order: int | None = None, pred=None) -> list[str]:
    out = []
    for n in cat.CATALOG_RINGS:
        R = cat.ring(n)
        if max_order is not None and R.order > max_order:
            continue
        if pred is not None and not pred(R):
            continue
        out.append(n)
    return out


def product_ring(names) -> FiniteRing:
    Rs = [cat.ring(n) for n in names]
    return direct_product(Rs, "(" + ")x(".join(names) + ")")


# -- evaluators -------------------------------------------------------------

def ev_holds(cfg, ring, monoids):
    """Lower nil verdict must hold on every listed fragment."""
    R = cat.ring(ring)
    res = [vrec(verdict(R, fragment_for(R, m, cfg), "lower-nil", cfg)) for m in monoids]
    return {"ok": all(r["outcome"] != FAILS for r in res), "verdicts": res}


def ev_ordered(cfg, ring, monoid, degree):
    R = cat.ring(ring)
    M = cat.monoid(monoid)
    frag = M.fragment(degree)
    bad = lex_order(M).verify(frag)
    v = verdict(R, frag, "lower-nil", cfg)
    return {"ok": bad is None and holds(v), "order_compatible": bad is None, "verdict": vrec(v)}


def ev_matrix_units(cfg, ring, variant, alpha, beta):
    R = cat.ring(ring)
    frag = full_fragment("matrix-units")
    M = frag.monoid
    up = up_violation_search(M, 2)
    v = verdict(R, frag, variant, cfg)
    rec = vrec(v)
    ok = v.fails and v.product.is_zero() and v.coefficient_product == R.one
    ok = ok and R.one not in target_set(R, "lower-nil")
    ok = ok and rec["canonical"] == {"alpha": alpha, "beta": beta}
    # the witness is also a lower nil violation
    lower = verdict_for_pair(R, frag, "lower-nil", v.alpha, v.beta)
    stated_a = MonoidRingElement.from_terms(R, M, [(R.one, M.parse("E22"))])
    stated_b = MonoidRingElement.from_terms(
        R, M, [(R.one, M.parse("E11")), (int(R.neg[R.one]), M.parse("E12"))])
    stated = verdict_for_pair(R, frag, "lower-nil", stated_a, stated_b)
    ok = ok and lower.fails and stated.fails and stated.product.is_zero()
    return {"ok": bool(ok), "not_up": [[M.format(g) for g in s] for s in up],
            "search": rec, "stated_pair": vrec(stated)}


def ev_subring(cfg, ring, gen):
    R = cat.ring(ring)
    S, incl = subring_generated(R, [gen], with_one=True)
    rad_r = target_set(R, "lower-nil")
    inside = all(incl(x) in rad_r for x in lower_nilradical_msequence(S))
    ni = upper_nilradical(R) == nilpotents(R)
    vr = verdict(R, nat_fragment(R, cfg), "lower-nil", cfg)
    vs = verdict(S, nat_fragment(S, cfg), "lower-nil", cfg)
    ok, status = implication(holds(vr) and (inside or ni), holds(vs))
    return {"ok": ok, "implication": status, "subring_order": S.order, "radical_inside": inside,
            "ambient_NI": ni, "ambient": vrec(vr), "subring": vrec(vs)}


def ev_hierarchy(cfg, ring, stronger, weaker, monoid="nat"):
    R = cat.ring(ring)
    frag = fragment_for(R, monoid, cfg)
    vs = verdict(R, frag, stronger, cfg)
    vw = verdict(R, frag, weaker, cfg)
    ok, status = implication(holds(vs), holds(vw))
    rec = {"ok": ok, "implication": status, stronger: vs.outcome, weaker: vw.outcome}
    if stronger == "lower-nil":
        rec["lower_equals_upper"] = target_set(R, "lower-nil") == target_set(R, "upper-nil")
    return rec


def _agree(R, S, frag, cfg):
    a = verdict(R, frag, "lower-nil", cfg)
    b = verdict(S, frag, "lower-nil", cfg)
    return a, b


def ev_tn(cfg, ring, monoid):
    R = cat.ring(ring)
    T = upper_triangular(R, 2)
    frag = fragment_for(R, monoid, cfg)
    a, b = _agree(R, T, frag, cfg)
    ok = a.outcome == b.outcome
    rec = {"base": vrec(a), "t2": vrec(b)}
    if ok and a.fails:
        up = transport_ring(a, scalar_embedding(R, T), T)
        rad = target_set(R, "lower-nil")
        off = int(T.mul[b.alpha.coefficient(b.i), b.beta.coefficient(b.j)])
        diag = T.structure.matrix(off)
        p = next(i for i in range(2) if int(diag[i, i]) not in rad)
        down = transport_ring(b, entry_projection(T, p), R)
        ok = up.fails and down.fails
        rec["transport"] = {"up": up.outcome, "down": down.outcome, "corner": p}
    return {"ok": ok, **rec}


def ev_formula(cfg, kind, ring, n=2, endo="id"):
    R = cat.ring(ring)
    if kind == "tn":
        f = radical_formula_check_Tn(R, n)
    elif kind == "h3":
        f = radical_formula_check_H3(R)
    else:
        f = radical_formula_check_skew(R, n, cat.endomorphism(R, endo))
    return {"ok": f.equal, "size": len(f.oracle), "difference": len(f.symmetric_difference)}


def ev_m2(cfg, ring):
    R = cat.ring(ring)
    v = check_M2_counterexample(R)
    M2 = v.ring
    e, g = v.fragment.elements
    A, B = v.alpha.coefficient(e), v.alpha.coefficient(g)
    C, D = v.beta.coefficient(e), v.beta.coefficient(g)
    parts = {"AC": int(M2.mul[A, C]), "AD+BC": int(M2.add[M2.mul[A, D], M2.mul[B, C]]),
             "BD": int(M2.mul[B, D])}
    designated = v.coefficient_product
    ok = (v.fails and v.product.is_zero() and all(x == M2.zero for x in parts.values())
          and is_idempotent(M2, designated) and designated != M2.zero
          and designated not in target_set(M2, "lower-nil"))
    return {"ok": bool(ok), "verdict": vrec(v), "designated": M2.label(designated),
            "idempotent": is_idempotent(M2, designated)}


def ev_monoid_ideal(cfg, ring, monoid):
    R = cat.ring(ring)
    M = cat.monoid(monoid)
    d = nat_degree(R, cfg)
    whole = M.fragment(d)
    ideal_els = tuple(M.op(g, (1,) + (0,) * (len(g) - 1)) for g in whole.elements)
    frag_n = MonoidFragment(M, tuple(sorted(ideal_els, key=M.key)), f"x*({whole.bound})",
                            unital=False)
    is_ideal = monoid_ideal_check(M, lambda g: g[0] >= 1, bound=d + 1)
    canc, _ = is_cancellative(M)
    vn = verdict(R, frag_n, "lower-nil", cfg)
    vm = verdict(R, whole, "lower-nil", cfg)
    ok, status = implication(is_ideal and canc and holds(vn), holds(vm))
    return {"ok": ok, "implication": status, "ideal": vrec(vn), "monoid": vrec(vm)}


def ev_localization(cfg, ring):
    R = cat.ring(ring)
    centre = [x for x in R.elements if (R.mul[x] == R.mul[:, x]).all()]
    S = [x for x in centre if R.inverse(x) is not None]
    L = localization(R, S)
    frags = [nat_fragment(R, cfg), full_fragment("c2")]
    same = all(verdict(R, f, "lower-nil", cfg).outcome
               == verdict(L.ring, f, "lower-nil", cfg).outcome for f in frags)
    fractions = all(int(R.mul[u, L.fraction(u, a)]) == a for u in S for a in R.elements)
    iso = find_isomorphism(L.ring, R) is not None
    return {"ok": bool(L.collapsed and same and fractions and iso), "multiplicative_set": len(S),
            "collapsed": L.collapsed}


def ev_localization_error(cfg, ring, members):
    R = cat.ring(ring)
    try:
        localization(R, members)
    except RingError as exc:
        return {"ok": True, "rejected": str(exc)}
    return {"ok": False, "rejected": None}


def ev_finite_order(cfg, ring, monoid):
    R = cat.ring(ring)
    frag = full_fragment(monoid)
    M = frag.monoid
    g, n = finite_order_element(M)
    v = verdict(R, frag, "lower-nil", cfg)
    a, b = finite_order_witness(R, M, g, n)
    w = verdict_for_pair(R, frag, "lower-nil", a, b)
    return {"ok": v.fails and w.fails and w.product.is_zero(), "search": vrec(v),
            "canonical_witness": vrec(w)}


def ev_submonoid(cfg, ring, small, big):
    R = cat.ring(ring)
    frag = full_fragment(small)
    V = verdict(R, frag, "lower-nil", cfg)
    M = cat.monoid(big)
    if big == small:
        embed = lambda g: g  # noqa: E731
    else:
        tail = M.identity[1:]
        embed = lambda g: (g,) + tail  # noqa: E731
    W = witness_transport_submonoid(V, M, embed)
    return {"ok": V.fails and W.fails, "source": vrec(V), "transported": vrec(W)}


def ev_submonoid_holds(cfg, ring):
    R = cat.ring(ring)
    big = cat.monoid("nat2")
    vb = verdict(R, big.fragment(1), "lower-nil", cfg)
    sub = submonoid_fragment(big, [(1, 0)], nat_degree(R, cfg))
    vs = verdict(R, sub, "lower-nil", cfg)
    ok, status = implication(holds(vb), holds(vs))
    return {"ok": ok, "implication": status, "monoid": vrec(vb), "submonoid": vrec(vs)}


def ev_torsion(cfg, factors):
    G = FGAbelian(factors)
    free = all(d == 0 for d in factors)
    found = []
    if free:
        for name in ("z2", "z3"):
            R = cat.ring(name)
            if holds(verdict(R, G.fragment(1), "lower-nil", cfg)):
                found.append(name)
    else:
        g, n = finite_order_element(G)
        frag = submonoid_fragment(G, [g], n - 1)
        for name in catalog_names(max_order=16):
            if holds(verdict(cat.ring(name), frag, "lower-nil", cfg)):
                found.append(name)
    ok = free == bool(found)
    return {"ok": ok, "torsion_free": free, "rings_holding": found}


def ev_h3(cfg, ring, monoid):
    R = cat.ring(ring)
    H = h3(R)
    a, b = _agree(R, H, fragment_for(R, monoid, cfg), cfg)
    return {"ok": a.outcome == b.outcome, "base": vrec(a), "h3": vrec(b)}


def ev_direct_product(cfg, left, right, monoid):
    Rs = [cat.ring(left), cat.ring(right)]
    P = product_ring([left, right])
    frag = fragment_for(P, monoid, cfg)
    vp = verdict(P, frag, "lower-nil", cfg)
    vs = [verdict(R, frag, "lower-nil", cfg) for R in Rs]
    ok = vp.fails == any(v.fails for v in vs)
    rec = {"product": vrec(vp), "factors": [v.outcome for v in vs]}
    if ok and vp.fails:
        projected = [transport_ring(vp, projection(P, Rs, k), Rs[k]).outcome for k in range(2)]
        ok = FAILS in projected
        rec["projected"] = projected
    return {"ok": ok, **rec}


def ev_radical_monoid_ring(cfg, ring, monoid):
    R = cat.ring(ring)
    M = cat.monoid(monoid)
    RM = finite_monoid_ring(R, M)
    lifted = lift_ideal(RM.structure, target_set(R, "lower-nil"))
    rad = lower_nilradical_msequence(RM)
    contained = lifted <= rad
    hyp = is_semicommutative(R) and holds(verdict(R, full_fragment(monoid), "lower-nil", cfg))
    ok, status = implication(hyp, lifted == rad)
    return {"ok": contained and ok, "implication": status, "contained": contained,
            "equal": lifted == rad, "order": RM.order}


def ev_iterated(cfg, ring, hypothesis, base, extra, bound=1):
    """Statements about ``R[M][N]``, ``R[N]`` over ``M`` or ``M x N``.

    Monoid rings over ``nat`` are infinite, so the conclusion is checked as the
    lower nil condition over a fragment of ``M x N``: it implies the stated
    one because ``R[M][N]`` is ``R[M x N]`` and coefficient products of a
    passing pair already lie in ``N_*(R)``.
    """
    R = cat.ring(ring)
    if cat.monoid(base).is_finite():
        hyp_frag = fragment_for(R, base, cfg)
    else:
        hyp_frag = fragment_for(R, f"{base}:{nat_degree(R, cfg) if base == 'nat' else 1}", cfg)
    if hypothesis == "semicommutative-lower-nil":
        hyp = is_semicommutative(R) and holds(verdict(R, hyp_frag, "lower-nil", cfg))
    elif hypothesis == "semicommutative-armendariz":
        hyp = is_semicommutative(R) and holds(verdict(R, hyp_frag, "armendariz", cfg))
    else:
        hyp = two_primal(R) and holds(verdict(R, hyp_frag, "armendariz", cfg))
    if base == "trivial":
        frag = nat_fragment(R, cfg) if extra == "nat" else fragment_for(R, extra, cfg)
        concl = verdict(finite_monoid_ring(R, cat.monoid("trivial")), frag, "lower-nil", cfg)
    else:
        M = product_monoid(cat.monoid(base), cat.monoid(extra))
        concl = verdict(R, M.fragment(bound), "lower-nil", cfg)
    ok, status = implication(hyp, holds(concl))
    return {"ok": ok, "implication": status, "conclusion": vrec(concl)}


def ev_dedekind(cfg, ring, monoid):
    R = cat.ring(ring)
    hyp = holds(verdict(R, full_fragment(monoid), "lower-nil", cfg))
    df = is_dedekind_finite(R)
    ok, status = implication(hyp, df)
    return {"ok": ok and df, "implication": status, "dedekind_finite": df}


def ev_coproduct(cfg, ring, parts, bound):
    R = cat.ring(ring)
    C = coproduct_monoid([cat.monoid(p) for p in parts])
    hyp = is_semicommutative(R) and holds(verdict(R, nat_fragment(R, cfg), "lower-nil", cfg))
    v = verdict(R, C.fragment(bound), "lower-nil", cfg)
    ok, status = implication(hyp, holds(v))
    return {"ok": ok, "implication": status, "verdict": vrec(v)}


def _chain(kind):
    z2 = cat.ring("z2")
    if kind == "diagonal":
        P2 = cat.ring("z2xz2")
        P4 = direct_product([P2, P2], "(z2xz2)x(z2xz2)")
        return [z2, P2, P4], [diagonal_embedding(z2, P2), diagonal_embedding(P2, P4)]
    T2 = cat.ring("t2(z2)")
    T4 = upper_triangular(z2, 4)
    return [z2, T2, T4], [block_diagonal_embedding(z2, T2), block_diagonal_embedding(T2, T4)]


def ev_direct_limit(cfg, chain):
    rings, maps = _chain(chain)
    rep = direct_limit_chain(rings, maps)
    stages = [verdict(R, cat.monoid("nat").fragment(2), "lower-nil", cfg) for R in rings]
    ok, status = implication(all(holds(v) for v in stages[:-1]), holds(stages[-1]))
    return {"ok": ok and rep.transported, "implication": status, "radical_transported": rep.transported,
            "stages": [{"ring": s.ring, "order": s.order, "outcome": v.outcome}
                       for s, v in zip(rep.stages, stages)]}


def _ideal_instances(R):
    return [I for I in enumerate_ideals(R)]


def ev_ideal_lifting(cfg, ring, form, monoid="nat:2"):
    """Both ideal lifting statements, scanned over every ideal of ``R``."""
    from .rings import quotient

    R = cat.ring(ring)
    frag = fragment_for(R, monoid, cfg)
    target = holds(verdict(R, frag, "lower-nil", cfg))
    rad = target_set(R, "lower-nil")
    counts = {CONFIRMED: 0, VACUOUS: 0, REFUTED: 0}
    refuted = []
    for I in _ideal_instances(R):
        if form == "semicommutative-ideal":
            hyp = is_semicommutative_ideal(R, I)[0]
            if hyp:
                Q, _ = quotient(R, I)
                hyp = holds(verdict(Q, frag, "lower-nil", cfg))
        else:
            hyp = len(I.members) < R.order and rad <= I.members and is_two_primal_rng(R, I)
            if hyp:
                Q, _ = quotient(R, I)
                hyp = holds(verdict(Q, frag, "armendariz", cfg))
        _, status = implication(hyp, target)
        counts[status] += 1
        if status == REFUTED:
            refuted.append(sorted(R.labels[x] for x in I.members))
    return {"ok": not refuted, "ideals": counts, "refuted_by": refuted}


def _skew_ring(kind, R, n, endo, name):
    if kind == "S":
        return s_ring(R, n, endo, name)
    if kind == "T":
        return t_ring(R, n, endo, name)
    if kind == "A":
        return a_ring(R, n, endo, name)
    if kind == "B":
        return b_ring(R, n, endo, name)
    if kind == "Tn":
        return skew_upper_triangular(R, n, endo, name)
    return skew_monoid_ring(R, FreeWord(["w"], n), endo)


def ev_skew(cfg, kind, ring, n, endo, monoid):
    R = cat.ring(ring)
    S = _skew_ring(kind, R, n, cat.endomorphism(R, endo), endo)
    a, b = _agree(R, S, fragment_for(R, monoid, cfg), cfg)
    return {"ok": a.outcome == b.outcome, "order": S.order, "base": a.outcome, "skew": b.outcome}


def ev_skew_tables(cfg, ring, n):
    """Identity twists reproduce the untwisted tables; Phi is an isomorphism."""
    R = cat.ring(ring)
    idm = cat.endomorphism(R, "id")
    same = skew_upper_triangular(R, n, idm, "id").same_tables(upper_triangular(R, n))
    return {"ok": bool(same), "identity_twist_matches": bool(same)}


def ev_phi(cfg, ring, n, endo):
    R = cat.ring(ring)
    e = cat.endomorphism(R, endo)
    iso = skew_poly_quotient_iso(R, n, e)
    contracted = skew_monoid_ring(R, FreeWord(["w"], n), e).same_tables(t_ring(R, n, e, endo))
    return {"ok": bool(iso and contracted), "phi_isomorphism": bool(iso),
            "skew_monoid_ring_matches": bool(contracted)}


def ev_t_convolution(cfg):
    R = cat.ring("z2")
    e = cat.endomorphism(R, "id")
    T = t_ring(R, 2, e, "id")
    shape = T.structure
    bad = 0
    for x in T.elements:
        for y in T.elements:
            a = tuple(int(v) for v in shape.matrix(x)[0])
            b = tuple(int(v) for v in shape.matrix(y)[0])
            want = t_ring_convolution(R, e, a, b)
            got = tuple(int(v) for v in shape.matrix(int(T.mul[x, y]))[0])
            bad += want != got
    return {"ok": bad == 0, "pairs": T.order ** 2, "mismatches": bad}


def ev_skew_monoid_radical(cfg, ring, gens, n, endo):
    R = cat.ring(ring)
    A = skew_monoid_ring(R, FreeWord([f"w{i + 1}" for i in range(gens)], n), cat.endomorphism(R, endo))
    st = A.structure
    rad_r = target_set(R, "lower-nil")
    # nonidentity words are nilpotent, so only the identity coefficient is constrained
    k = st.monoid_elements.index(st.monoid.identity)
    formula = frozenset(x for x in A.elements if st.digits(x)[k] in rad_r)
    oracle = lower_nilradical_msequence(A)
    lifted = lift_ideal(st, rad_r)
    return {"ok": formula == oracle and lifted <= oracle, "order": A.order,
            "radical": len(oracle), "lifted": len(lifted)}


def ev_weak_annihilator(cfg, ring, monoid):
    R = cat.ring(ring)
    M = cat.monoid(monoid)
    family = weak_annihilator_family(R)
    brute_ok = R.order > 16 or family == weak_annihilator_family_bruteforce(R)
    RM = finite_monoid_ring(R, M)
    big = weak_annihilator_family(RM, cap=RM.order)
    images = [lift_ideal(RM.structure, I) for I in family]
    in_family = sum(1 for J in images if J in big)
    # finite monoids with two or more elements are never u.p.
    hyp = M.up_status == "by construction" and len(as_table(M)[0]) > 1
    ok, status = implication(hyp, in_family == len(family) and len(big) == len(family))
    return {"ok": ok and brute_ok, "implication": status, "family": len(family),
            "monoid_ring_family": len(big), "images_in_family": in_family}


def ev_weak_annihilator_example(cfg):
    R = make_zmod(12)
    got = weak_annihilator(R, [4])
    return {"ok": got == frozenset({0, 3, 6, 9}) and got in weak_annihilator_family(R),
            "N(4)": sorted(got)}


def ev_nilpotent_pp(cfg, ring, monoid):
    rep = check_nilpotent_pp_monoid_ring(cat.ring(ring), cat.monoid(monoid), cfg.budget)
    return {"ok": rep.status != "REFUTATION", "implication": rep.status,
            "ring_nilpotent_pp": rep.ring_nilpotent_pp}


def ev_uniserial(cfg, ring):
    R = cat.ring(ring)
    chain = is_chain_ring(R)
    res = [verdict(R, nat_fragment(R, cfg), "lower-nil", cfg),
           verdict(R, cat.monoid("nat2").fragment(1), "lower-nil", cfg)]
    ok, status = implication(chain, all(holds(v) for v in res))
    return {"ok": ok and chain, "implication": status, "chain_ring": chain,
            "verdicts": [v.outcome for v in res]}


def ev_lemma_2primal(cfg, ring, monoid):
    """2-primal M-Armendariz R: R[M] is 2-primal with matching nil sets, R lower nil."""
    R = cat.ring(ring)
    if monoid == "nat":
        frag = nat_fragment(R, cfg)
        hyp = two_primal(R) and holds(verdict(R, frag, "armendariz", cfg))
        ok, status = implication(hyp, holds(verdict(R, frag, "lower-nil", cfg)))
        return {"ok": ok, "implication": status}
    M = cat.monoid(monoid)
    frag = full_fragment(monoid)
    hyp = two_primal(R) and holds(verdict(R, frag, "armendariz", cfg))
    RM = finite_monoid_ring(R, M)
    nil_lift = lift_ideal(RM.structure, nilpotents(R))
    rad_lift = lift_ideal(RM.structure, target_set(R, "lower-nil"))
    concl = (two_primal(RM) and nil_lift == nilpotents(RM) == rad_lift
             == lower_nilradical_msequence(RM) and holds(verdict(R, frag, "lower-nil", cfg)))
    ok, status = implication(hyp, concl)
    return {"ok": ok, "implication": status}


def ev_catalog_radicals(cfg, ring):
    """Both prime radical algorithms agree and ``N_* <= N^* <= N``."""
    R = cat.ring(ring)
    low = lower_nilradical_msequence(R)
    agree = R.order > 64 or low == lower_nilradical_primes(R)
    up = upper_nilradical(R)
    return {"ok": agree and low <= up <= nilpotents(R), "lower": len(low), "upper": len(up),
            "nilpotents": len(nilpotents(R))}


# -- the registry -----------------------------------------------------------

def _inst(label, **params):
    return Instance(label, params)


def _two_primal_names(max_order=None):
    return catalog_names(max_order, two_primal)


def _semicomm_names(max_order=None):
    return catalog_names(max_order, is_semicommutative)


def build_registry() -> list[TheoremCheck]:
    small = ["z2", "z3", "z4", "z2xz2", "t2(z2)"]
    finite_ms = ["c2", "lz2", "matrix-units"]
    checks = [
        TheoremCheck(
            "prop-2.1", "For a u.p. monoid M every 2-primal ring is lower nil M-Armendariz.", PASS,
            ev_holds,
            tuple(_inst(f"{n}", ring=n, monoids=["nat"] + (["nat2:2"] if n == "z2" else ["nat2:1"]
                                                          if cat.ring(n).order <= 16 else []))
                  for n in _two_primal_names())),
        TheoremCheck(
            "cor-semicommutative", "For a u.p. monoid M every semicommutative ring is lower nil "
            "M-Armendariz.", PASS, ev_holds,
            tuple(_inst(n, ring=n, monoids=["nat", "free2:2" if cat.ring(n).order <= 2 else "free2:1"])
                  for n in _semicomm_names())),
        TheoremCheck(
            "cor-ordered", "For a strictly totally ordered monoid M every 2-primal ring is lower "
            "nil M-Armendariz.", PASS, ev_ordered,
            tuple(_inst(f"{n} over nat2", ring=n, monoid="nat2", degree=1)
                  for n in _two_primal_names(64))),
        TheoremCheck(
            "ex-matrix-units", "Over the matrix-unit monoid {0, I, E11, E12, E21, E22}, which is "
            "not u.p., alpha = E22 and beta = E11 - E12 give alpha beta = 0 while 1*1 is not in "
            "N_*(R).", WITNESS, ev_matrix_units,
            (_inst("z2 lower-nil", ring="z2", variant="lower-nil",
                   alpha=[0, 0, 0, 0, 0, 1], beta=[0, 0, 1, 1, 0, 0]),
             _inst("z4 armendariz", ring="z4", variant="armendariz",
                   alpha=[0, 0, 0, 0, 0, 1], beta=[0, 0, 1, 3, 0, 0]))),
        TheoremCheck(
            "prop-subring", "If R is lower nil M-Armendariz (M u.p.) and S is a subring with "
            "N_*(S) inside N_*(R), or R is NI, then S is lower nil M-Armendariz.", PASS, ev_subring,
            tuple(_inst(f"{n} <{cat.ring(n).labels[g]}>", ring=n, gen=g)
                  for n in ["z12", "t2(z4)", "t3(z2)", "h3(z2)", "m2(z2)", "skewT2(z2xz2,swap)"]
                  for g in ring_generators(cat.ring(n)))),
        TheoremCheck(
            "prop-lower-nil-implies-nil", "For a u.p. monoid M every lower nil M-Armendariz ring "
            "is nil M-Armendariz (N_* = N^* is audited, not assumed).", PASS, ev_hierarchy,
            tuple(_inst(n, ring=n, stronger="lower-nil", weaker="nil") for n in cat.CATALOG_RINGS)),
        TheoremCheck(
            "prop-armendariz-lower-nil", "For a u.p. monoid M every M-Armendariz ring is lower nil "
            "M-Armendariz.", PASS, ev_hierarchy,
            tuple(_inst(n, ring=n, stronger="armendariz", weaker="lower-nil",
                        monoid="nat" if cat.ring(n).order <= 16 else "nat:1")
                  for n in cat.CATALOG_RINGS)),
        TheoremCheck(
            "prop-tn", "For |M| >= 2, R is lower nil M-Armendariz iff T_n(R) is.", PASS, ev_tn,
            tuple(_inst(f"{n} x {m}", ring=n, monoid=m)
                  for n in small for m in ["nat:2"] + finite_ms)),
        TheoremCheck(
            "prop-tn-radical", "N_*(T_n(R)) consists of the matrices with diagonal in N_*(R).",
            PASS, ev_formula,
            tuple(_inst(f"T{n}({r})", kind="tn", ring=r, n=n)
                  for r, n in [("z2", 2), ("z4", 2), ("z2", 3), ("z3", 2), ("z12", 2),
                               ("z2xz2", 2), ("z8", 2)])),
        TheoremCheck(
            "ex-m2", "alpha = E12 e - E11 g and beta = (E11+E12) e + (E21+E22) g give "
            "alpha beta = 0 in M_2(R)[M] with an idempotent coefficient product, so M_2(R) is not "
            "lower nil M-Armendariz.", WITNESS, ev_m2,
            (_inst("z2", ring="z2"), _inst("z4", ring="z4"), _inst("z3", ring="z3"))),
        TheoremCheck(
            "prop-monoid-ideal", "If N is an ideal of a cancellative monoid M and R is lower nil "
            "N-Armendariz, then R is lower nil M-Armendariz.", PASS, ev_monoid_ideal,
            tuple(_inst(f"{n} over {m}", ring=n, monoid=m)
                  for n in catalog_names(16) for m in ["nat"])),
        TheoremCheck(
            "prop-localization", "For a multiplicative set S of central regular elements, R is "
            "lower nil M-Armendariz iff S^-1 R is (S^-1 R collapses to R for finite rings).", PASS,
            ev_localization,
            tuple(_inst(n, ring=n) for n in ["z9", "z12", "z2xz4", "t2(z4)", "h3(z2)"])),
        TheoremCheck(
            "prop-localization-rejects", "Localization needs regular central elements.", PASS,
            ev_localization_error, (_inst("z6 with 2", ring="z6", members=[1, 2, 4]),)),
        TheoremCheck(
            "lem-finite-order", "If M has a nontrivial element of finite order and 0 != 1 in R, "
            "then R is not lower nil M-Armendariz.", WITNESS, ev_finite_order,
            tuple(_inst(f"{n} x {m}", ring=n, monoid=m)
                  for n in cat.CATALOG_RINGS for m in ["c2", "c3", "c4"])),
        TheoremCheck(
            "lem-submonoid", "Lower nil M-Armendariz passes to submonoids; failures over a "
            "submonoid persist in M.", WITNESS, ev_submonoid,
            (_inst("z2 c2 in prod(c2,nat)", ring="z2", small="c2", big="prod(c2,nat)"),
             _inst("z2 matrix-units in itself", ring="z2", small="matrix-units", big="matrix-units"),
             _inst("z2 lz2 in prod(lz2,nat)", ring="z2", small="lz2", big="prod(lz2,nat)"),
             _inst("z4 c3 in prod(c3,nat)", ring="z4", small="c3", big="prod(c3,nat)"))),
        TheoremCheck(
            "lem-submonoid-holds", "A ring lower nil over nat2 is lower nil over the submonoid "
            "generated by (1,0).", PASS, ev_submonoid_holds,
            tuple(_inst(n, ring=n) for n in ["z2", "z4", "z12", "t2(z2)", "m2(z2)"])),
        TheoremCheck(
            "thm-torsion-free", "A finitely generated abelian group G is torsion-free iff some "
            "ring with |R| >= 2 is lower nil G-Armendariz.", PASS, ev_torsion,
            tuple(_inst(str(f), factors=f) for f in [[0], [0, 0], [2], [3], [0, 2], [0, 3]])),
        TheoremCheck(
            "prop-h3", "For |M| >= 2, R is lower nil M-Armendariz iff H_3(R) is.", PASS, ev_h3,
            tuple(_inst(f"{n} x {m}", ring=n, monoid=m)
                  for n in ["z2", "z3", "z4"] for m in ["nat:2"] + finite_ms)),
        TheoremCheck(
            "prop-h3-radical", "N_*(H_3(R)) has N_*(R) on the diagonal and free entries at (2,1) "
            "and (2,3).", PASS, ev_formula,
            tuple(_inst(f"H3({r})", kind="h3", ring=r) for r in ["z2", "z3", "z4", "z2xz2"])),
        TheoremCheck(
            "prop-direct-product", "Direct sums and products of lower nil M-Armendariz rings are "
            "lower nil M-Armendariz; a product fails iff a factor fails.", PASS, ev_direct_product,
            tuple(_inst(f"{a} x {b} over {m}", left=a, right=b, monoid=m)
                  for a, b in [("z2", "z4"), ("z3", "z4"), ("z2", "t2(z2)"), ("z2", "m2(z2)")]
                  for m in ["nat:2"] + finite_ms)),
        TheoremCheck(
            "prop-radical-monoid-ring", "For semicommutative lower nil M-Armendariz R, "
            "N_*(R)[M] = N_*(R[M]); the inclusion N_*(R)[M] in N_*(R[M]) always holds.", PASS,
            ev_radical_monoid_ring,
            tuple(_inst(f"{n}[{m}]", ring=n, monoid=m)
                  for n in _semicomm_names(8)
                  for m in ["trivial", "c2", "c3", "lz2"] + (["matrix-units"] if cat.ring(n).order <= 3 else []))),
        TheoremCheck(
            "prop-rm-lower-nil-n", "If R is semicommutative and lower nil M-Armendariz and N is "
            "u.p., then R[M] is lower nil N-Armendariz.", PASS, ev_iterated,
            tuple(_inst(f"{n} M={m}", ring=n, hypothesis="semicommutative-lower-nil", base=m,
                        extra="nat")
                  for n in _semicomm_names(9) for m in ["trivial", "nat", "c2"])),
        TheoremCheck(
            "thm-rn", "If R is semicommutative and lower nil M-Armendariz and N is u.p., then "
            "R[N] is lower nil M-Armendariz.", PASS, ev_iterated,
            tuple(_inst(f"{n} M={m}", ring=n, hypothesis="semicommutative-lower-nil", base=m,
                        extra="nat2")
                  for n in _semicomm_names(9) for m in ["nat", "c2"])),
        TheoremCheck(
            "prop-dedekind", "For a cyclic group M of order n >= 2 every lower nil M-Armendariz "
            "ring is Dedekind finite.", PASS, ev_dedekind,
            tuple(_inst(f"{n} x {m}", ring=n, monoid=m)
                  for n in cat.CATALOG_RINGS for m in ["c2", "c3"])),
        TheoremCheck(
            "thm-mxn", "If R is semicommutative and lower nil M-Armendariz and N is u.p., then R "
            "is lower nil M x N-Armendariz.", PASS, ev_iterated,
            tuple(_inst(f"{n} M={m}", ring=n, hypothesis="semicommutative-lower-nil", base=m,
                        extra="nat")
                  for n in _semicomm_names(9) for m in ["nat", "free2", "lz2"])),
        TheoremCheck(
            "cor-coproduct", "If each M_i is u.p. and a semicommutative R is lower nil "
            "M_i-Armendariz for one i, then R is lower nil over the coproduct.", PASS, ev_coproduct,
            tuple(_inst(f"{n} over {'+'.join(p)}", ring=n, parts=p, bound=1)
                  for n in _semicomm_names(9) for p in [["nat", "nat"], ["nat", "free2"]])),
        TheoremCheck(
            "thm-direct-limit", "Lower nil M-Armendariz rings are closed under direct limits "
            "(checked on finite prefixes of direct systems).", PASS, ev_direct_limit,
            (_inst("diagonal z2 -> z2^2 -> z2^4", chain="diagonal"),
             _inst("block z2 -> T2(z2) -> T4(z2)", chain="block"))),
        TheoremCheck(
            "thm-semicommutative-ideal", "If I is a semicommutative ideal and R/I is lower nil "
            "M-Armendariz for strictly totally ordered M, then R is lower nil M-Armendariz.", PASS,
            ev_ideal_lifting,
            tuple(_inst(n, ring=n, form="semicommutative-ideal") for n in catalog_names(64))),
        TheoremCheck(
            "thm-skew-constructions", "R is lower nil M-Armendariz iff S(R,n,a), T(R,n,a), "
            "A(R,n,a), B(R,n,a), T_n(R,a) and R[S,a] are.", PASS, ev_skew,
            tuple(_inst(f"{k}({r},{n},{e}) x {m}", kind=k, ring=r, n=n, endo=e, monoid=m)
                  for k, r, n, e in [("S", "z2", 3, "id"), ("T", "z2", 3, "id"),
                                     ("A", "z2", 4, "id"), ("B", "z2", 4, "id"),
                                     ("Tn", "z2", 3, "id"), ("skew-monoid", "z2", 3, "id"),
                                     ("S", "z2xz2", 3, "swap"), ("T", "z2xz2", 3, "swap"),
                                     ("Tn", "z2xz2", 2, "swap"), ("skew-monoid", "z2xz2", 3, "swap"),
                                     ("A", "z3", 4, "id"), ("B", "z3", 4, "id")]
                  for m in ["nat:2", "c2", "lz2"])),
        TheoremCheck(
            "prop-skew-tables", "Skew constructions with the identity twist coincide with the "
            "untwisted ones.", PASS, ev_skew_tables,
            tuple(_inst(f"T{n}({r})", ring=r, n=n) for r, n in [("z2", 2), ("z2", 3), ("z4", 2),
                                                                 ("z2xz2", 2)])),
        TheoremCheck(
            "prop-skew-poly-iso", "Phi: R[x,a]/(x^n) -> T(R,n,a), sum a_i x^i -> (a_0,...,a_{n-1}) "
            "is a ring isomorphism.", PASS, ev_phi,
            (_inst("(z2,2,id)", ring="z2", n=2, endo="id"),
             _inst("(z4,3,id)", ring="z4", n=3, endo="id"),
             _inst("(z2xz2,2,swap)", ring="z2xz2", n=2, endo="swap"))),
        TheoremCheck(
            "prop-t-convolution", "T(R,2,id) multiplies as (a0,a1)(b0,b1) = (a0 b0, a0 b1 + a1 b0).",
            PASS, lambda cfg: ev_t_convolution(cfg), (_inst("z2"),)),
        TheoremCheck(
            "prop-skew-radical", "N_*(T_n(R,a)) has N_*(R) on the diagonal and free entries "
            "above it; N_*(R[S,a]) = N_*(R)[S].", PASS,
            lambda cfg, kind, **kw: (ev_skew_monoid_radical(cfg, **kw) if kind == "monoid"
                                     else ev_formula(cfg, "skew", **kw)),
            (_inst("T2(z2xz2,swap)", kind="matrix", ring="z2xz2", n=2, endo="swap"),
             _inst("T3(z2,id)", kind="matrix", ring="z2", n=3, endo="id"),
             _inst("T2(z4,id)", kind="matrix", ring="z4", n=2, endo="id"),
             _inst("z4[w; w^3=0]", kind="monoid", ring="z4", gens=1, n=3, endo="id"),
             _inst("z2xz2[w; w^3=0, swap]", kind="monoid", ring="z2xz2", gens=1, n=3, endo="swap"),
             _inst("z2[w1,w2; length 2 = 0]", kind="monoid", ring="z2", gens=2, n=2, endo="id"))),
        TheoremCheck(
            "thm-weak-annihilator", "For u.p. M with nontrivial centre and lower nil "
            "M-Armendariz R, I -> I[M] is a bijection of weak annihilator families (finite "
            "monoids are never u.p., so finite instances are vacuous).", PASS, ev_weak_annihilator,
            tuple(_inst(f"{n}[{m}]", ring=n, monoid=m)
                  for n in ["z2", "z3", "z4", "z2xz2", "t2(z2)"] for m in ["c2", "lz2"])),
        TheoremCheck(
            "ex-weak-annihilator", "N(4) = {0, 3, 6, 9} in Z_12.", PASS,
            lambda cfg: ev_weak_annihilator_example(cfg), (_inst("z12"),)),
        TheoremCheck(
            "thm-nilpotent-pp", "If R is a semicommutative lower nil M-Armendariz nilpotent p.p. "
            "ring, then so is R[M].", PASS, ev_nilpotent_pp,
            tuple(_inst(f"{n}[{m}]", ring=n, monoid=m)
                  for n in catalog_names(16) for m in ["trivial", "c2", "lz2"])),
        TheoremCheck(
            "thm-3.1", "For strictly totally ordered M and a proper ideal I with N_*(R) in I: if "
            "R/I is M-Armendariz and I is a 2-primal ring, then R is lower nil M-Armendariz.", PASS,
            ev_ideal_lifting,
            tuple(_inst(n, ring=n, form="two-primal-ideal") for n in catalog_names(64))),
        TheoremCheck(
            "cor-torsion-free-monoid", "For a commutative cancellative torsion-free M with "
            "|M| >= 2, R is lower nil M-Armendariz if R is 2-primal, or if R/I is M-Armendariz "
            "for a 2-primal ideal I containing N_*(R).", PASS,
            lambda cfg, form, ring, monoid: (ev_holds(cfg, ring, [monoid]) if form == "2-primal"
                                             else ev_ideal_lifting(cfg, ring, "two-primal-ideal",
                                                                   monoid)),
            tuple(_inst(f"{n} over {m}", form="2-primal", ring=n, monoid=m)
                  for n in _two_primal_names(16) for m in ["nat2:1", "z:1"])
            + tuple(_inst(f"{n} ideals over {m}", form="ideal", ring=n, monoid=m)
                    for n in catalog_names(16) for m in ["nat2:1"])),
        TheoremCheck(
            "prop-uniserial", "For u.p. M every right or left uniserial ring is lower nil "
            "M-Armendariz.", PASS, ev_uniserial,
            tuple(_inst(n, ring=n) for n in ["z2", "z3", "z4", "z8", "z9"])),
        TheoremCheck(
            "prop-semicomm-armendariz-rm", "If R is semicommutative and M-Armendariz and N is "
            "u.p., then R[M] is lower nil N-Armendariz.", PASS, ev_iterated,
            tuple(_inst(f"{n} M={m}", ring=n, hypothesis="semicommutative-armendariz", base=m,
                        extra="nat")
                  for n in _semicomm_names(9) for m in ["trivial", "nat", "c2"])),
        TheoremCheck(
            "lem-2primal-armendariz", "If R is 2-primal and M-Armendariz, then R[M] is 2-primal, "
            "R is lower nil M-Armendariz and N(R)[M] = N(R[M]) = N_*(R)[M] = N_*(R[M]).", PASS,
            ev_lemma_2primal,
            tuple(_inst(f"{n} M={m}", ring=n, monoid=m)
                  for n in _two_primal_names(16) for m in ["trivial", "c2", "lz2", "nat"])),
        TheoremCheck(
            "prop-2primal-rn", "If R is 2-primal and M-Armendariz and N is u.p., then R[N] is "
            "lower nil M-Armendariz.", PASS, ev_iterated,
            tuple(_inst(f"{n} M={m}", ring=n, hypothesis="two-primal-armendariz", base=m,
                        extra="nat2")
                  for n in _two_primal_names(9) for m in ["nat", "c2"])),
        TheoremCheck(
            "prop-2primal-mxn", "If R is 2-primal and M-Armendariz and N is u.p., then R is lower "
            "nil M x N-Armendariz.", PASS, ev_iterated,
            tuple(_inst(f"{n} M={m}", ring=n, hypothesis="two-primal-armendariz", base=m,
                        extra="nat")
                  for n in _two_primal_names(9) for m in ["nat", "lz2"])),
        TheoremCheck(
            "audit-radicals", "Prime-ideal and m-sequence radicals agree; N_* <= N^* <= N.", PASS,
            ev_catalog_radicals, tuple(_inst(n, ring=n) for n in cat.CATALOG_RINGS)),
    ]
    return checks


# ids that must be present; checked by the completeness test
REQUIRED_IDS = (
    "prop-2.1", "cor-semicommutative", "cor-ordered", "ex-matrix-units", "prop-subring",
    "prop-lower-nil-implies-nil", "prop-tn", "prop-tn-radical", "ex-m2", "prop-monoid-ideal",
    "prop-localization", "lem-finite-order", "lem-submonoid", "thm-torsion-free", "prop-h3",
    "prop-direct-product", "prop-radical-monoid-ring", "prop-rm-lower-nil-n", "thm-rn",
    "prop-dedekind", "thm-mxn", "cor-coproduct", "thm-direct-limit", "thm-semicommutative-ideal",
    "thm-skew-constructions", "prop-skew-radical", "thm-weak-annihilator", "thm-nilpotent-pp",
    "thm-3.1", "cor-torsion-free-monoid", "prop-armendariz-lower-nil", "prop-uniserial",
    "prop-semicomm-armendariz-rm", "lem-2primal-armendariz", "prop-2primal-rn", "prop-2primal-mxn",
)


_REGISTRY: list | None = None


def registry() -> list[TheoremCheck]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = build_registry()
    return _REGISTRY


def select(pattern: str | None) -> list[TheoremCheck]:
    checks = registry()
    if not pattern:
        return checks
    return [c for c in checks if fnmatch.fnmatchcase(c.id, pattern)]


def _run_by_id(args):
    check_id, cfg, timings = args
    check = next(c for c in registry() if c.id == check_id)
    return check.run(cfg, timings)


def run_registry(pattern: str | None = None, cfg: Config | None = None,
                 timings: bool = False, progress: Callable | None = None) -> dict:
    """Run every check whose id matches ``pattern`` (shell-style) and assemble a report."""
    cfg = cfg or Config()
    checks = select(pattern)
    if cfg.jobs > 1 and len(checks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_run_by_id, [(c.id, cfg, timings) for c in checks]))
        if progress:
            for r in results:
                progress(r)
    else:
        results = []
        for c in checks:
            r = c.run(cfg, timings)
            results.append(r)
            if progress:
                progress(r)
    summary = {k: sum(1 for r in results if r["outcome"] == k)
               for k in (PASS, WITNESS, SKIPPED, DEVIATION)}
    return {
        "suite": {"name": "ringlab theorem registry", "filter": pattern, "config": cfg.to_dict(),
                  "checks": len(results), "summary": summary},
        "checks": results,
    }


def report_ok(report: dict) -> bool:
    return report["suite"]["summary"][DEVIATION] == 0


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    raise TypeError(f"not serialisable: {type(x).__name__}")


# -- class search -----------------------------------------------------------

PREDICATES = ("reduced", "semicommutative", "two_primal", "NI", "nilpotent_pp", "dedekind_finite")


def ring_profile(R: FiniteRing) -> dict:
    flags = class_predicates(R).as_dict()
    flags["nilpotent_pp"] = is_nilpotent_pp(R)
    return flags


class ExpressionError(ValueError):
    pass


def parse_expression(text: str):
    """Boolean expression over predicate names with ``!``, ``&``, ``|`` and parentheses."""
    tokens = re.findall(r"[A-Za-z_]+|[!&|()]|\S", text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        pos += 1
        return tokens[pos - 1]

    def atom():
        t = peek()
        if t is None:
            raise ExpressionError("unexpected end of expression")
        if t == "!":
            take()
            inner = atom()
            return lambda p: not inner(p)
        if t == "(":
            take()
            inner = disj()
            if peek() != ")":
                raise ExpressionError("missing ')'")
            take()
            return inner
        if t in PREDICATES:
            take()
            return lambda p: p[t]
        raise ExpressionError(f"unknown token {t!r}; predicates are {', '.join(PREDICATES)}")

    def conj():
        left = atom()
        while peek() == "&":
            take()
            right, prev = atom(), left
            left = lambda p, a=prev, b=right: a(p) and b(p)  # noqa: E731
        return left

    def disj():
        left = conj()
        while peek() == "|":
            take()
            right, prev = conj(), left
            left = lambda p, a=prev, b=right: a(p) or b(p)  # noqa: E731
        return left

    expr = disj()
    if pos != len(tokens):
        raise ExpressionError(f"unexpected token {tokens[pos]!r}")
    return expr


def search(expression: str) -> list[dict]:
    pred = parse_expression(expression)
    out = []
    for n in cat.CATALOG_RINGS:
        prof = ring_profile(cat.ring(n))
        if pred(prof):
            out.append({"ring": n, "order": cat.ring(n).order, "classes": prof})
    return out
