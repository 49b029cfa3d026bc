"""Finite table monoids and structured infinite monoids.

Infinite monoids only expose what bounded searches need: identity,
product, a canonical sort key, element literals, and enumeration of finite
fragments by a degree bound.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

UP_BY_CONSTRUCTION = "by construction"
UP_REFUTED = "refuted"
UP_UNKNOWN = "unknown"


class MonoidError(ValueError):
    pass


class Monoid:
    """Common interface; subclasses fix the element model."""

    name: str = ""
    kind: str = ""

    @property
    def identity(self):
        raise NotImplementedError

    def op(self, a, b):
        raise NotImplementedError

    def key(self, a):
        """Canonical sort key; fragments and supports are ordered by it."""
        return a

    def is_finite(self) -> bool:
        return False

    def fragment(self, bound: int) -> MonoidFragment:
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def power(self, a, k: int):
        r = self.identity
        for _ in range(k):
            r = self.op(r, a)
        return r

    def grading(self, a) -> int:
        """Twist exponent used by skew monoid rings (0 unless overridden)."""
        return 0

    @property
    def up_status(self) -> str:
        return UP_UNKNOWN

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


@dataclass(frozen=True, eq=False)
class MonoidFragment:
    monoid: Monoid
    elements: tuple
    bound: str
    # supports drawn from a proper monoid ideal never contain the identity
    unital: bool = True

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise MonoidError("fragment has duplicates")
        if self.unital and self.monoid.identity not in self.elements:
            raise MonoidError("fragment must contain the identity")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def describe(self) -> dict:
        return {"monoid": self.monoid.name, "bound": self.bound, "size": len(self.elements),
                "elements": [self.monoid.format(g) for g in self.elements]}


# -- finite table monoids ---------------------------------------------------

class FiniteTableMonoid(Monoid):
    kind = "FiniteTable"

    def __init__(self, table, labels: Sequence[str], identity: int, name: str = "",
                 zero: int | None = None, grades: Sequence[int] | None = None):
        self.table = np.array(table, dtype=np.int64)
        self.table.setflags(write=False)
        self.labels = tuple(labels)
        self._identity = identity
        self.zero = zero
        self.name = name
        self._grades = tuple(grades) if grades is not None else None
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        n = len(self.labels)
        if self.table.shape != (n, n):
            raise MonoidError("table must be square and match the labels")

    @property
    def identity(self):
        return self._identity

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> tuple:
        return tuple(range(self.order))

    def op(self, a, b):
        return int(self.table[a, b])

    def is_finite(self) -> bool:
        return True

    def fragment(self, bound: int | None = None) -> MonoidFragment:
        return MonoidFragment(self, self.elements, "all")

    def format(self, a) -> str:
        return self.labels[a]

    def parse(self, text: str):
        return self._index[text.strip()]

    def grading(self, a) -> int:
        return self._grades[a] if self._grades is not None else 0

    @property
    def up_status(self) -> str:
        return UP_BY_CONSTRUCTION if self.order == 1 else UP_REFUTED

    def associativity_violation(self) -> tuple | None:
        T = self.table
        bad = T[T[:, :, None], np.arange(self.order)[None, None, :]] != T[
            np.arange(self.order)[:, None, None], T[None, :, :]]
        if bad.any():
            return tuple(int(v) for v in np.argwhere(bad)[0])
        return None

    def identity_violation(self) -> int | None:
        e = self._identity
        r = np.arange(self.order)
        bad = np.flatnonzero((self.table[e] != r) | (self.table[:, e] != r))
        return int(bad[0]) if len(bad) else None


def make_table_monoid(table, labels, identity: int = 0, name: str = "",
                      zero: int | None = None, grades=None) -> FiniteTableMonoid:
    M = FiniteTableMonoid(table, labels, identity, name, zero, grades)
    if M.associativity_violation() is not None:
        raise MonoidError(f"{name}: not associative at {M.associativity_violation()}")
    if M.identity_violation() is not None:
        raise MonoidError(f"{name}: identity law fails")
    return M


def make_matrix_unit_monoid() -> FiniteTableMonoid:
    """``{0, I, E11, E12, E21, E22}`` under matrix multiplication."""
    labels = ["0", "I", "E11", "E12", "E21", "E22"]
    units = {2: (1, 1), 3: (1, 2), 4: (2, 1), 5: (2, 2)}
    t = np.zeros((6, 6), dtype=np.int64)
    for a in range(6):
        for b in range(6):
            if a == 1:
                t[a, b] = b
            elif b == 1:
                t[a, b] = a
            elif a == 0 or b == 0:
                t[a, b] = 0
            else:
                (i, j), (k, l) = units[a], units[b]
                t[a, b] = next(x for x, u in units.items() if u == (i, l)) if j == k else 0
    M = make_table_monoid(t, labels, identity=1, name="matrix-units", zero=0)
    M.kind = "MatrixUnits"
    return M


def make_lz2() -> FiniteTableMonoid:
    """``{e, z}`` with ``z z = z``."""
    return make_table_monoid([[0, 1], [1, 1]], ["e", "z"], 0, "lz2")


def trivial_monoid() -> FiniteTableMonoid:
    return make_table_monoid([[0]], ["e"], 0, "trivial")


# -- structured monoids -----------------------------------------------------

class CyclicGroup(Monoid):
    """``C_n``; element ``k`` stands for ``g^k``."""

    kind = "CyclicGroup"

    def __init__(self, n: int, name: str | None = None, gen: str = "g"):
        if n < 1:
            raise MonoidError("cyclic group order must be positive")
        self.n = n
        self.gen = gen
        self.name = name or f"c{n}"

    @property
    def identity(self):
        return 0

    @property
    def order(self) -> int:
        return self.n

    @property
    def elements(self) -> tuple:
        return tuple(range(self.n))

    def op(self, a, b):
        return (a + b) % self.n

    def is_finite(self) -> bool:
        return True

    def fragment(self, bound: int | None = None) -> MonoidFragment:
        return MonoidFragment(self, self.elements, "all")

    def format(self, a) -> str:
        return "e" if a == 0 else self.gen if a == 1 else f"{self.gen}^{a}"

    def parse(self, text: str):
        text = text.strip()
        if text == "e":
            return 0
        if text == self.gen:
            return 1 % self.n
        m = re.fullmatch(re.escape(self.gen) + r"\^(\d+)", text)
        if not m:
            raise MonoidError(f"cannot parse {text!r} in {self.name}")
        return int(m.group(1)) % self.n

    @property
    def table(self) -> np.ndarray:
        r = np.arange(self.n)
        return (r[:, None] + r[None, :]) % self.n

    @property
    def up_status(self) -> str:
        return UP_BY_CONSTRUCTION if self.n == 1 else UP_REFUTED


class FreeCommutative(Monoid):
    """``N^k`` written multiplicatively; elements are exponent tuples."""

    kind = "FreeCommutative"

    def __init__(self, k: int, name: str | None = None, variables: Sequence[str] | None = None):
        if k < 1:
            raise MonoidError("need at least one generator")
        self.k = k
        self.name = name or ("nat" if k == 1 else f"nat{k}")
        if variables is None:
            variables = ["x"] if k == 1 else ["x", "y", "z"][:k] if k <= 3 else [
                f"x{i + 1}" for i in range(k)]
        self.variables = tuple(variables)

    @property
    def identity(self):
        return (0,) * self.k

    def op(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def key(self, a):
        return (sum(a), a)

    def grading(self, a) -> int:
        return sum(a)

    def fragment(self, bound: int) -> MonoidFragment:
        """Monomials of total degree at most ``bound`` in (degree, exponent) order."""
        els = [t for t in itertools.product(range(bound + 1), repeat=self.k) if sum(t) <= bound]
        els.sort(key=self.key)
        return MonoidFragment(self, tuple(els), f"degree<={bound}")

    def format(self, a) -> str:
        if not any(a):
            return "e"
        parts = []
        for v, d in zip(self.variables, a):
            if d == 1:
                parts.append(v)
            elif d > 1:
                parts.append(f"{v}^{d}")
        return "*".join(parts)

    def parse(self, text: str):
        text = text.strip()
        exps = [0] * self.k
        if text == "e":
            return tuple(exps)
        for part in text.split("*"):
            m = re.fullmatch(r"([A-Za-z]\w*?)(?:\^(\d+))?", part.strip())
            if not m or m.group(1) not in self.variables:
                raise MonoidError(f"cannot parse {text!r} in {self.name}")
            exps[self.variables.index(m.group(1))] += int(m.group(2) or 1)
        return tuple(exps)

    @property
    def up_status(self) -> str:
        return UP_BY_CONSTRUCTION


class FGAbelian(Monoid):
    """``Z/d_1 x ... x Z/d_r`` with ``d_i = 0`` meaning a free factor ``Z``."""

    kind = "FGAbelian"

    def __init__(self, invariant_factors: Sequence[int], name: str | None = None):
        if any(d < 0 or d == 1 for d in invariant_factors):
            raise MonoidError("invariant factors must be 0 or at least 2")
        self.factors = tuple(invariant_factors)
        self.name = name or "fgab(" + ",".join(map(str, self.factors)) + ")"

    @property
    def identity(self):
        return (0,) * len(self.factors)

    def op(self, a, b):
        return tuple((x + y) % d if d else x + y for x, y, d in zip(a, b, self.factors))

    def inverse(self, a):
        return tuple((-x) % d if d else -x for x, d in zip(a, self.factors))

    def key(self, a):
        return (sum(abs(x) for x in a), a)

    def is_finite(self) -> bool:
        return all(self.factors)

    def fragment(self, bound: int) -> MonoidFragment:
        ranges = [range(-bound, bound + 1) if d == 0 else range(min(d, bound + 1))
                  for d in self.factors]
        els = [t for t in itertools.product(*ranges)
               if sum(abs(x) for x in t) <= bound]
        els.sort(key=self.key)
        return MonoidFragment(self, tuple(els), f"norm<={bound}")

    def format(self, a) -> str:
        return "(" + ",".join(map(str, a)) + ")"

    def parse(self, text: str):
        return tuple(int(v) for v in text.strip().strip("()").split(","))

    @property
    def up_status(self) -> str:
        return UP_BY_CONSTRUCTION if torsion_check_fg_abelian(self.factors) else UP_REFUTED


class FreeWord(Monoid):
    """Free monoid on named generators; words are tuples of generator indices.

    With ``nil_degree`` set, every word of length ``>= nil_degree`` is
    identified with an absorbing zero (encoded as ``None``), giving the
    graded factor monoids used for skew monoid rings.
    """

    kind = "FreeWord"
    ZERO = None

    def __init__(self, generators: Sequence[str], nil_degree: int | None = None,
                 name: str | None = None):
        self.generators = tuple(generators)
        self.nil_degree = nil_degree
        self.name = name or (f"free{len(self.generators)}" if nil_degree is None
                             else f"free{len(self.generators)}/deg{nil_degree}")

    @property
    def identity(self):
        return ()

    def op(self, a, b):
        if a is None or b is None:
            return None
        w = a + b
        if self.nil_degree is not None and len(w) >= self.nil_degree:
            return None
        return w

    def key(self, a):
        return (1 << 30, ()) if a is None else (len(a), a)

    def grading(self, a) -> int:
        return self.nil_degree if a is None else len(a)

    def is_finite(self) -> bool:
        return self.nil_degree is not None

    def fragment(self, bound: int) -> MonoidFragment:
        els = [w for n in range(bound + 1)
               for w in itertools.product(range(len(self.generators)), repeat=n)]
        if self.nil_degree is not None:
            els = [w for w in els if len(w) < self.nil_degree] + [None]
        return MonoidFragment(self, tuple(els), f"length<={bound}")

    def format(self, a) -> str:
        if a is None:
            return "0"
        return "e" if not a else ".".join(self.generators[i] for i in a)

    def parse(self, text: str):
        text = text.strip()
        if text == "0" and self.nil_degree is not None:
            return None
        if text == "e":
            return ()
        return tuple(self.generators.index(t) for t in text.split("."))

    @property
    def up_status(self) -> str:
        return UP_BY_CONSTRUCTION if self.nil_degree is None else UP_REFUTED


class ProductMonoid(Monoid):
    """Componentwise product; a list of one factor is the coproduct of that factor."""

    kind = "Product"

    def __init__(self, factors: Sequence[Monoid], name: str | None = None, kind: str = "Product"):
        self.factors = tuple(factors)
        self.kind = kind
        self.name = name or ("prod(" + ",".join(f.name for f in self.factors) + ")")

    @property
    def identity(self):
        return tuple(f.identity for f in self.factors)

    def op(self, a, b):
        return tuple(f.op(x, y) for f, x, y in zip(self.factors, a, b))

    def key(self, a):
        return tuple(f.key(x) for f, x in zip(self.factors, a))

    def grading(self, a) -> int:
        return sum(f.grading(x) for f, x in zip(self.factors, a))

    def is_finite(self) -> bool:
        return all(f.is_finite() for f in self.factors)

    def fragment(self, bound: int) -> MonoidFragment:
        parts = [f.fragment(bound).elements for f in self.factors]
        els = sorted(itertools.product(*parts), key=self.key)
        return MonoidFragment(self, tuple(els), f"factorwise<={bound}")

    @property
    def elements(self) -> tuple:
        if not self.is_finite():
            raise MonoidError("infinite monoid has no element list")
        return self.fragment(0).elements

    def format(self, a) -> str:
        return "(" + ",".join(f.format(x) for f, x in zip(self.factors, a)) + ")"

    def parse(self, text: str):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise MonoidError(f"cannot parse {text!r} in {self.name}")
        parts, depth, cur = [], 0, ""
        for ch in text[1:-1]:
            if ch == "," and depth == 0:
                parts.append(cur)
                cur = ""
                continue
            depth += ch in "(["
            depth -= ch in ")]"
            cur += ch
        parts.append(cur)
        return tuple(f.parse(p) for f, p in zip(self.factors, parts))

    @property
    def up_status(self) -> str:
        statuses = {f.up_status for f in self.factors}
        if statuses == {UP_BY_CONSTRUCTION}:
            return UP_BY_CONSTRUCTION
        # a factor embeds as a submonoid, and submonoids of u.p. monoids are u.p.
        if any(f.up_status == UP_REFUTED for f in self.factors):
            return UP_REFUTED
        return UP_UNKNOWN


def product_monoid(M: Monoid, N: Monoid) -> ProductMonoid:
    return ProductMonoid([M, N], f"prod({M.name},{N.name})")


def coproduct_monoid(ms: Sequence[Monoid]) -> ProductMonoid:
    """Finite-support tuples; for a finite index list this is the product."""
    if not ms:
        raise MonoidError("coproduct of an empty family")
    return ProductMonoid(ms, "coprod(" + ",".join(m.name for m in ms) + ")", kind="Coproduct")


def as_table(M: Monoid) -> tuple[list, np.ndarray]:
    """Element list and product table of a finite monoid (indices into the list)."""
    if isinstance(M, FiniteTableMonoid):
        return list(M.elements), M.table
    if isinstance(M, CyclicGroup):
        return list(M.elements), M.table
    if not M.is_finite():
        raise MonoidError(f"{M.name} is infinite")
    els = list(M.elements) if hasattr(M, "elements") else list(M.fragment(0).elements)
    pos = {g: i for i, g in enumerate(els)}
    t = np.array([[pos[M.op(a, b)] for b in els] for a in els], dtype=np.int64)
    return els, t


# -- predicates -------------------------------------------------------------

def is_cancellative(M: Monoid) -> tuple[bool, tuple | None]:
    """Rows and columns of the table are permutations.

    Witness ``(side, a, x, y)``: ``a x = a y`` (side "left") or ``x a = y a``
    (side "right") with ``x != y``, smallest by ``(a, x, y)``.
    Free, free-commutative and abelian group kinds are cancellative by
    construction.
    """
    if isinstance(M, (FreeCommutative, FGAbelian)):
        return True, None
    if isinstance(M, FreeWord) and M.nil_degree is None:
        return True, None
    if isinstance(M, ProductMonoid) and not M.is_finite():
        flags = [is_cancellative(f) for f in M.factors]
        return all(f for f, _ in flags), None
    els, t = as_table(M)
    n = len(els)
    for a in range(n):
        for side, line in (("left", t[a]), ("right", t[:, a])):
            for x in range(n):
                dup = np.flatnonzero(line[x + 1:] == line[x])
                if len(dup):
                    return False, (side, els[a], els[x], els[x + 1 + int(dup[0])])
    return True, None


def unique_products(M: Monoid, A: Iterable, B: Iterable) -> list:
    """Elements of ``AB`` presented exactly once as ``ab``."""
    counts: dict = {}
    for a in A:
        for b in B:
            g = M.op(a, b)
            counts[g] = counts.get(g, 0) + 1
    return [g for g, c in counts.items() if c == 1]


def _subsets(els: Sequence, max_size: int):
    for k in range(1, max_size + 1):
        yield from itertools.combinations(els, k)


def up_violation_search(M: Monoid, max_subset: int) -> tuple | str | None:
    """Nonempty ``A, B`` (each of size <= max_subset) with no uniquely presented product.

    Subsets are tried by size, then lexicographically by element order.
    Kinds that are u.p. by construction return the string
    ``"u.p. by construction"`` instead of searching.
    """
    if M.up_status == UP_BY_CONSTRUCTION and not M.is_finite():
        return "u.p. by construction"
    if not M.is_finite():
        return None
    els, _ = as_table(M)
    for A in _subsets(els, max_subset):
        for B in _subsets(els, max_subset):
            if not unique_products(M, A, B):
                return (A, B)
    return None


def torsion_check_fg_abelian(invariant_factors: Sequence[int]) -> bool:
    """True iff torsion-free, i.e. every factor is a free ``Z``."""
    return all(d == 0 for d in invariant_factors)


def finite_order_element(M: Monoid, bound: int = 4) -> tuple | None:
    """A unit ``g != e`` with ``g^n = e``, searching a fragment where needed."""
    if isinstance(M, CyclicGroup):
        return (1, M.n) if M.n > 1 else None
    if isinstance(M, FGAbelian):
        for i, d in enumerate(M.factors):
            if d:
                g = tuple(1 if j == i else 0 for j in range(len(M.factors)))
                return (g, d)
        return None
    if isinstance(M, FreeCommutative) or (isinstance(M, FreeWord) and M.nil_degree is None):
        return None
    if isinstance(M, ProductMonoid):
        for i, f in enumerate(M.factors):
            hit = finite_order_element(f, bound)
            if hit:
                g = tuple(hit[0] if j == i else h.identity for j, h in enumerate(M.factors))
                return (g, hit[1])
        return None
    els = M.fragment(bound).elements
    e = M.identity
    for g in els:
        if g == e:
            continue
        cur = g
        for n in range(1, len(els) + 2):
            if cur == e:
                return (g, n)
            cur = M.op(cur, g)
    return None


def submonoid_fragment(M: Monoid, gens: Sequence, bound: int) -> MonoidFragment:
    """Products of at most ``bound`` generators (the identity included)."""
    seen = [M.identity]
    layer = [M.identity]
    for _ in range(bound):
        nxt = []
        for w in layer:
            for g in gens:
                p = M.op(w, g)
                if p not in seen:
                    seen.append(p)
                    nxt.append(p)
        layer = nxt
    seen.sort(key=M.key)
    return MonoidFragment(M, tuple(seen), f"words<={bound}")


def monoid_ideal_check(M: Monoid, members, bound: int = 3) -> bool:
    """Two-sided absorption: ``m n`` and ``n m`` stay in the subset.

    ``members`` is a finite collection or a membership predicate; for
    infinite monoids the scan runs over ``M.fragment(bound)`` and, for a
    predicate, the members found in that fragment.
    """
    if callable(members):
        pred: Callable = members
        pool = M.fragment(bound).elements if not M.is_finite() else as_table(M)[0]
        sample = [g for g in pool if pred(g)]
    else:
        sample = list(members)
        pred = set(sample).__contains__
        pool = M.fragment(bound).elements if not M.is_finite() else as_table(M)[0]
    if not sample:
        return False
    return all(pred(M.op(m, n)) and pred(M.op(n, m)) for m in pool for n in sample)


@dataclass(frozen=True, eq=False)
class OrderedMonoidWitness:
    monoid: Monoid
    compare: Callable = field(repr=False)

    def less(self, a, b) -> bool:
        return self.compare(a, b) < 0

    def verify(self, fragment: MonoidFragment) -> tuple | None:
        """First triple ``(r1, r2, s)`` breaking strict compatibility, else ``None``."""
        M = self.monoid
        els = fragment.elements
        for r1 in els:
            for r2 in els:
                if r1 == r2:
                    if self.compare(r1, r2) != 0:
                        return (r1, r2, None)
                    continue
                if self.compare(r1, r2) == 0:
                    return (r1, r2, None)
                if not self.less(r1, r2):
                    continue
                for s in els:
                    if not (self.less(M.op(r1, s), M.op(r2, s)) and self.less(M.op(s, r1), M.op(s, r2))):
                        return (r1, r2, s)
        return None


def lex_order(M: FreeCommutative) -> OrderedMonoidWitness:
    """Lexicographic order on exponent vectors, first coordinate dominant."""
    if not isinstance(M, FreeCommutative):
        raise MonoidError("lex order is defined for free commutative monoids")

    def compare(a, b) -> int:
        return (a > b) - (a < b)

    return OrderedMonoidWitness(M, compare)


def monoid_isomorphic_elements(M: Monoid, N: Monoid, bijection: dict, fragment) -> bool:
    """Check that ``bijection`` carries products in ``fragment`` to products."""
    return all(bijection[M.op(a, b)] == N.op(bijection[a], bijection[b])
               for a in fragment for b in fragment
               if M.op(a, b) in bijection)


def monoid_by_name(name: str) -> Monoid:
    """Catalog monoids: nat, nat2, c2, c3, c4, matrix-units, free2, lz2, prod(a,b)."""
    name = name.strip()
    m = re.fullmatch(r"prod\((.+)\)", name)
    if m:
        inner, depth, parts, cur = m.group(1), 0, [], ""
        for ch in inner:
            if ch == "," and depth == 0:
                parts.append(cur)
                cur = ""
                continue
            depth += ch == "("
            depth -= ch == ")"
            cur += ch
        parts.append(cur)
        ms = [monoid_by_name(p) for p in parts]
        return ProductMonoid(ms, f"prod({','.join(x.name for x in ms)})")
    m = re.fullmatch(r"c(\d+)", name)
    if m:
        return CyclicGroup(int(m.group(1)))
    m = re.fullmatch(r"nat(\d*)", name)
    if m:
        return FreeCommutative(int(m.group(1) or 1))
    m = re.fullmatch(r"free(\d+)", name)
    if m:
        k = int(m.group(1))
        return FreeWord([f"w{i + 1}" for i in range(k)])
    fixed = {"matrix-units": make_matrix_unit_monoid, "lz2": make_lz2, "trivial": trivial_monoid}
    if name in fixed:
        return fixed[name]()
    raise MonoidError(f"unknown monoid {name!r}")


MONOID_CATALOG = ("nat", "nat2", "c2", "c3", "c4", "lz2", "matrix-units", "free2", "prod(nat,c2)",
                  "trivial")


def default_fragment(M: Monoid, bound: int) -> MonoidFragment:
    return M.fragment(bound) if not M.is_finite() or isinstance(M, ProductMonoid) else M.fragment()


def element_key_list(fragment: MonoidFragment) -> list[Hashable]:
    return [fragment.monoid.key(g) for g in fragment.elements]
