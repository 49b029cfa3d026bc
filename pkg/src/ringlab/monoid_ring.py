"""Finite-support elements of monoid rings, skew variants, and exact tabulation
of ``R[M]`` for finite ``M``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .monoids import Monoid, MonoidError, MonoidFragment, as_table
from .rings import (TABLE_CAP, FiniteRing, RingError, RingMap, SearchBudgetExceeded,
                    SizeCapExceeded, _mixed_radix, encode_tuples, make_ring)


class MonoidRingError(ValueError):
    pass


@dataclass(frozen=True)
class MonoidRingElement:
    """``sum a_i g_i`` with coefficients on the left.

    ``terms`` holds ``(g, a)`` pairs, nonzero ``a`` only, sorted by the monoid key.
    """

    ring: FiniteRing
    monoid: Monoid
    terms: tuple

    @classmethod
    def from_terms(cls, ring: FiniteRing, monoid: Monoid, pairs: Iterable) -> MonoidRingElement:
        """Collect like monoid terms; ``pairs`` yields ``(coefficient, monoid element)``."""
        acc: dict = {}
        for a, g in pairs:
            acc[g] = int(ring.add[acc.get(g, ring.zero), a])
        terms = sorted(((g, a) for g, a in acc.items() if a != ring.zero),
                       key=lambda t: monoid.key(t[0]))
        return cls(ring, monoid, tuple(terms))

    @classmethod
    def zero(cls, ring: FiniteRing, monoid: Monoid) -> MonoidRingElement:
        return cls(ring, monoid, ())

    @classmethod
    def monomial(cls, ring: FiniteRing, monoid: Monoid, a: int, g) -> MonoidRingElement:
        return cls.from_terms(ring, monoid, [(a, g)])

    def __hash__(self):
        return hash((id(self.ring), id(self.monoid), self.terms))

    def __eq__(self, other):
        return (isinstance(other, MonoidRingElement) and self.ring is other.ring
                and self.monoid is other.monoid and self.terms == other.terms)

    @property
    def support(self) -> tuple:
        return tuple(g for g, _ in self.terms)

    @property
    def coefficients(self) -> tuple:
        return tuple(a for _, a in self.terms)

    def coefficient(self, g) -> int:
        for h, a in self.terms:
            if h == g:
                return a
        return self.ring.zero

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: MonoidRingElement):
        if self.ring is not other.ring or self.monoid is not other.monoid:
            raise MonoidRingError("ring or monoid mismatch")

    def __add__(self, other: MonoidRingElement) -> MonoidRingElement:
        self._check(other)
        pairs = [(a, g) for g, a in self.terms] + [(a, g) for g, a in other.terms]
        return MonoidRingElement.from_terms(self.ring, self.monoid, pairs)

    def __neg__(self) -> MonoidRingElement:
        return MonoidRingElement.from_terms(
            self.ring, self.monoid, [(int(self.ring.neg[a]), g) for g, a in self.terms])

    def __sub__(self, other: MonoidRingElement) -> MonoidRingElement:
        return self + (-other)

    def __mul__(self, other: MonoidRingElement) -> MonoidRingElement:
        return multiply(self, other)

    def __str__(self):
        return format_element(self)


def add(x: MonoidRingElement, y: MonoidRingElement) -> MonoidRingElement:
    return x + y


def negate(x: MonoidRingElement) -> MonoidRingElement:
    return -x


def scalar_multiply(r: int, x: MonoidRingElement, side: str = "left") -> MonoidRingElement:
    R = x.ring
    if side == "left":
        pairs = [(int(R.mul[r, a]), g) for g, a in x.terms]
    else:
        pairs = [(int(R.mul[a, r]), g) for g, a in x.terms]
    return MonoidRingElement.from_terms(R, x.monoid, pairs)


def multiply(x: MonoidRingElement, y: MonoidRingElement) -> MonoidRingElement:
    """Convolution over the ambient monoid."""
    x._check(y)
    R, M = x.ring, x.monoid
    return MonoidRingElement.from_terms(
        R, M, [(int(R.mul[a, b]), M.op(g, h)) for g, a in x.terms for h, b in y.terms])


@dataclass(frozen=True, eq=False)
class SkewContext:
    """Twist data for ``w r = endo(r) w``; ``grading`` defaults to the monoid's."""

    ring: FiniteRing
    endo: RingMap
    grading: Callable | None = None

    def __post_init__(self):
        if self.endo.source is not self.ring or self.endo.target is not self.ring:
            raise MonoidRingError("endomorphism must map the coefficient ring to itself")
        if not self.endo.is_homomorphism(unital=True):
            raise MonoidRingError("twist must be a unital ring endomorphism")

    def degree(self, M: Monoid, g) -> int:
        return self.grading(g) if self.grading is not None else M.grading(g)

    def check_grading(self, M: Monoid, sample: Iterable) -> None:
        sample = list(sample)
        if self.degree(M, M.identity) != 0:
            raise MonoidRingError("grading of the identity must be 0")
        for g in sample:
            for h in sample:
                gh = M.op(g, h)
                # absorbing zeros in truncated word monoids carry no twist constraint
                if gh is None:
                    continue
                if self.degree(M, gh) != self.degree(M, g) + self.degree(M, h):
                    raise MonoidRingError(f"grading is not additive at {M.format(g)}, {M.format(h)}")


def skew_multiply(ctx: SkewContext, x: MonoidRingElement, y: MonoidRingElement) -> MonoidRingElement:
    """``(r g)(s h) = r endo^deg(g)(s) (g h)``."""
    x._check(y)
    R, M = x.ring, x.monoid
    if ctx.ring is not R:
        raise MonoidRingError("skew context is over a different ring")
    table = np.asarray(ctx.endo.table)
    pairs = []
    for g, a in x.terms:
        k = ctx.degree(M, g)
        for h, b in y.terms:
            s = b
            for _ in range(k):
                s = int(table[s])
            pairs.append((int(R.mul[a, s]), M.op(g, h)))
    return MonoidRingElement.from_terms(R, M, pairs)


def coefficients_in(x: MonoidRingElement, S) -> bool:
    return all(a in S for a in x.coefficients)


# -- literals ---------------------------------------------------------------

def format_element(x: MonoidRingElement) -> str:
    if not x.terms:
        return "0"
    return " + ".join(f"{x.ring.label(a)}*{x.monoid.format(g)}" for g, a in x.terms)


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split on separator characters outside brackets; returns (sign, chunk)."""
    out, depth, cur, sign = [], 0, "", "+"
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps and (i == 0 or text[i - 1] == " "):
            if cur.strip():
                out.append((sign, cur.strip()))
            sign, cur = ch, ""
            continue
        cur += ch
    if cur.strip():
        out.append((sign, cur.strip()))
    return out


def parse_element(R: FiniteRing, M: Monoid, text: str) -> MonoidRingElement:
    """Inverse of ``format_element``; also accepts ``a*g - b*h`` and bare ``g``."""
    text = text.strip()
    if text == "0":
        return MonoidRingElement.zero(R, M)
    pairs = []
    for sign, chunk in _split_top(text, "+-"):
        depth, cut = 0, None
        for i, ch in enumerate(chunk):
            depth += ch in "(["
            depth -= ch in ")]"
            if ch == "*" and depth == 0:
                cut = i
                break
        if cut is None:
            coef, mon = R.one, chunk
        else:
            try:
                coef = R.index(chunk[:cut].strip())
                mon = chunk[cut + 1:]
            except (KeyError, RingError):
                coef, mon = R.one, chunk
        try:
            g = M.parse(mon)
        except (KeyError, ValueError, MonoidError) as exc:
            raise MonoidRingError(f"cannot parse term {chunk!r}") from exc
        if sign == "-":
            coef = int(R.neg[coef])
        pairs.append((coef, g))
    return MonoidRingElement.from_terms(R, M, pairs)


# -- finite monoid rings ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class MonoidRingStructure:
    base: FiniteRing
    monoid: Monoid
    monoid_elements: tuple

    def digits(self, x: int) -> tuple:
        q, m = self.base.order, len(self.monoid_elements)
        out = []
        for _ in range(m):
            x, r = divmod(x, q)
            out.append(r)
        return tuple(reversed(out))

    def to_element(self, x: int) -> MonoidRingElement:
        return MonoidRingElement.from_terms(
            self.base, self.monoid, zip(self.digits(x), self.monoid_elements))

    def index_of(self, e: MonoidRingElement) -> int:
        d = [e.coefficient(g) for g in self.monoid_elements]
        return int(encode_tuples(np.array(d), [self.base.order] * len(d)))


def finite_monoid_ring(R: FiniteRing, M: Monoid, name: str | None = None) -> FiniteRing:
    """Tabulate ``R[M]``; element ``x`` is the coefficient vector in ``M``'s element order."""
    els, t = as_table(M)
    q, m = R.order, len(els)
    if q ** m > TABLE_CAP:
        raise SizeCapExceeded(f"{R.name}[{M.name}] would have order {q ** m} > {TABLE_CAP}")
    size = q ** m
    D = _mixed_radix([q] * m)                          # (size, m), ring indices
    orders = [q] * m
    add = encode_tuples(R.add[D[:, None], D[None, :]], orders)
    mul = np.empty((size, size), dtype=np.int64)
    chunk = max(1, 2_000_000 // (size * m))
    for start in range(0, size, chunk):
        A = D[start:start + chunk]
        C = np.full((len(A), size, m), R.zero, dtype=np.int64)
        for g in range(m):
            for h in range(m):
                k = t[g, h]
                C[..., k] = R.add[C[..., k], R.mul[A[:, g][:, None], D[:, h][None, :]]]
        mul[start:start + chunk] = encode_tuples(C, orders)
    zero = int(encode_tuples(np.full(m, R.zero), orders))
    one_d = np.full(m, R.zero)
    one_d[els.index(M.identity)] = R.one
    one = int(encode_tuples(one_d, orders))
    structure = MonoidRingStructure(R, M, tuple(els))
    labels = []
    for x in range(size):
        e = structure.to_element(x)
        labels.append("(" + format_element(e).replace(" ", "") + ")")
    return make_ring(add, mul, zero, one, labels, name or f"{R.name}[{M.name}]", structure)


def enumerate_elements(R: FiniteRing, fragment: MonoidFragment,
                       budget: int | None = None) -> Iterator[MonoidRingElement]:
    """Every element with support in ``fragment``; coefficient tuples in
    lexicographic order with the first fragment element most significant."""
    count = R.order ** len(fragment)
    if budget is not None and count > budget:
        raise SearchBudgetExceeded(f"{count} elements exceed the budget {budget}")
    M = fragment.monoid
    for coeffs in itertools.product(range(R.order), repeat=len(fragment)):
        yield MonoidRingElement.from_terms(R, M, zip(coeffs, fragment.elements))


def element_from_coefficients(R: FiniteRing, fragment: MonoidFragment, coeffs) -> MonoidRingElement:
    return MonoidRingElement.from_terms(R, fragment.monoid, zip(coeffs, fragment.elements))


def coefficient_vector(x: MonoidRingElement, fragment: MonoidFragment) -> tuple:
    if any(g not in fragment.elements for g in x.support):
        raise MonoidRingError("support leaves the fragment")
    return tuple(x.coefficient(g) for g in fragment.elements)


def lift_ideal(structure: MonoidRingStructure, S) -> frozenset:
    """Indices of ``S[M]`` inside the tabulated monoid ring."""
    S = sorted(S)
    m = len(structure.monoid_elements)
    out = []
    for coeffs in itertools.product(S, repeat=m):
        out.append(int(encode_tuples(np.array(coeffs), [structure.base.order] * m)))
    return frozenset(out)


def skew_monoid_ring(R: FiniteRing, S: Monoid, endo: RingMap, name: str | None = None) -> FiniteRing:
    """Tabulate the contracted skew monoid ring ``R[S, endo]`` of a truncated word monoid.

    Terms at the absorbing zero of ``S`` are identified with ``0``, so with one
    generator and nil degree ``n`` this is ``R[x, endo]/(x^n)``.
    """
    if not S.is_finite() or getattr(S, "nil_degree", None) is None:
        raise MonoidRingError("skew monoid rings are tabulated for truncated word monoids only")
    ctx = SkewContext(R, endo)
    els = [g for g in S.fragment(S.nil_degree).elements if g is not None]
    ctx.check_grading(S, els)
    q, m = R.order, len(els)
    if q ** m > TABLE_CAP:
        raise SizeCapExceeded(f"{R.name}[{S.name}] would have order {q ** m} > {TABLE_CAP}")
    pos = {g: i for i, g in enumerate(els)}
    powers = [np.arange(q)]
    table = np.asarray(endo.table)
    for _ in range(S.nil_degree):
        powers.append(table[powers[-1]])
    size = q ** m
    D = _mixed_radix([q] * m)
    orders = [q] * m
    add_t = encode_tuples(R.add[D[:, None], D[None, :]], orders)
    C = np.full((size, size, m), R.zero, dtype=np.int64)
    for g in els:
        twist = powers[ctx.degree(S, g)]
        for h in els:
            gh = S.op(g, h)
            if gh is None:
                continue
            k = pos[gh]
            C[..., k] = R.add[C[..., k], R.mul[D[:, pos[g]][:, None], twist[D[:, pos[h]]][None, :]]]
    mul_t = encode_tuples(C, orders)
    zero = int(encode_tuples(np.full(m, R.zero), orders))
    one_d = np.full(m, R.zero)
    one_d[pos[S.identity]] = R.one
    one = int(encode_tuples(one_d, orders))
    structure = MonoidRingStructure(R, S, tuple(els))
    labels = ["(" + format_element(structure.to_element(x)).replace(" ", "") + ")"
              for x in range(size)]
    return make_ring(add_t, mul_t, zero, one, labels, name or f"{R.name}[{S.name},{endo_name(endo)}]",
                     structure)


def endo_name(endo: RingMap) -> str:
    return "id" if list(endo.table) == list(range(endo.source.order)) else "endo"
