"""Matrix-type rings built over a finite base ring.

A matrix ring is described by a list of parameters, each filling one or more
matrix positions with the same base-ring value; uncovered positions are zero.
Elements are parameter tuples (first parameter most significant), and the
multiplication table is computed from the matrices and mapped back, which
also verifies that the shape is closed under multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .radicals import lower_nilradical_msequence
from .rings import (TABLE_CAP, FiniteRing, RingError, RingMap, SizeCapExceeded,
                    encode_tuples, identity_map, make_ring, _mixed_radix)


@dataclass(frozen=True, eq=False)
class MatrixShape:
    base: FiniteRing
    n: int
    constraint: str
    params: tuple          # tuple of tuples of (i, j) positions
    endo: RingMap | None = None

    def entries(self, digits) -> np.ndarray:
        """n x n matrix of base-ring indices for a parameter tuple."""
        m = np.full((self.n, self.n), self.base.zero, dtype=np.int64)
        for value, positions in zip(digits, self.params):
            for i, j in positions:
                m[i, j] = value
        return m

    def digits(self, x: int) -> tuple:
        out = []
        for _ in self.params:
            x, d = divmod(x, self.base.order)
            out.append(d)
        return tuple(reversed(out))

    def matrix(self, x: int) -> np.ndarray:
        return self.entries(self.digits(x))

    def index_of(self, matrix) -> int:
        """Index of a matrix; raises RingError if it is outside the shape."""
        matrix = np.asarray(matrix)
        digits = [int(matrix[p[0]]) for p in self.params]
        if not np.array_equal(self.entries(digits), matrix):
            raise RingError("matrix does not have the required shape")
        return int(encode_tuples(np.array(digits), [self.base.order] * len(digits)))


def _matrix_label(base: FiniteRing, m: np.ndarray) -> str:
    return "[" + ",".join("[" + ",".join(base.labels[v] for v in row) + "]" for row in m) + "]"


def build_matrix_ring(base: FiniteRing, n: int, params, constraint: str,
                      endo: RingMap | None = None, name: str = "") -> FiniteRing:
    """Tabulate the ring of n x n matrices of the given parameter shape.

    With ``endo`` set, products use ``c_ij = sum_l a_il * endo^(l-i)(b_lj)``,
    which only makes sense on upper triangular shapes.
    """
    params = tuple(tuple(p) for p in params)
    q, p = base.order, len(params)
    size = q ** p
    if size > TABLE_CAP:
        raise SizeCapExceeded(f"{name or constraint} would have order {size} > {TABLE_CAP}")
    shape = MatrixShape(base, n, constraint, params, endo)
    covered = np.zeros((n, n), dtype=bool)
    for pos in params:
        for ij in pos:
            if covered[ij]:
                raise RingError(f"position {ij} assigned twice")
            covered[ij] = True
    if endo is not None and any(i > j for pos in params for i, j in pos):
        raise RingError("skew multiplication needs an upper triangular shape")

    digits = _mixed_radix([q] * p)                      # (size, p)
    mats = np.full((size, n, n), base.zero, dtype=np.int64)
    for k, pos in enumerate(params):
        for i, j in pos:
            mats[:, i, j] = digits[:, k]

    powers = [np.arange(q)]
    if endo is not None:
        e = np.asarray(endo.table)
        for _ in range(n):
            powers.append(e[powers[-1]])

    def to_index(m: np.ndarray) -> np.ndarray:
        # m: (..., n, n) -> (...) indices, checking the shape
        d = np.stack([m[..., pos[0][0], pos[0][1]] for pos in params], -1)
        ok = np.ones(m.shape[:-2], dtype=bool)
        for k, pos in enumerate(params):
            for i, j in pos[1:]:
                ok &= m[..., i, j] == d[..., k]
        for i in range(n):
            for j in range(n):
                if not covered[i, j]:
                    ok &= m[..., i, j] == base.zero
        if not ok.all():
            raise RingError(f"{name or constraint} is not closed under the ring operations")
        return encode_tuples(d, [q] * p)

    add = to_index(base.add[mats[:, None], mats[None, :]])
    mul = np.empty((size, size), dtype=np.int64)
    chunk = max(1, 4_000_000 // (size * n * n))
    for start in range(0, size, chunk):
        A = mats[start:start + chunk]
        prod = np.full((len(A), size, n, n), base.zero, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                acc = np.full((len(A), size), base.zero, dtype=np.int64)
                for l in range(n):
                    if endo is not None and not (i <= l <= j):
                        continue
                    b = mats[:, l, j]
                    if endo is not None:
                        b = powers[l - i][b]
                    acc = base.add[acc, base.mul[A[:, None, i, l], b[None, :]]]
                prod[..., i, j] = acc
        mul[start:start + chunk] = to_index(prod)

    zero = to_index(np.full((1, n, n), base.zero))[0]
    ident = np.full((1, n, n), base.zero)
    for i in range(n):
        ident[0, i, i] = base.one
    one = to_index(ident)[0]
    labels = [_matrix_label(base, m) for m in mats]
    return make_ring(add, mul, zero, one, labels, name or f"{constraint}({base.name},{n})",
                     structure=shape)


def _upper_positions(n: int):
    return [[(i, j)] for i in range(n) for j in range(i, n)]


def full_matrix(R: FiniteRing, n: int) -> FiniteRing:
    return build_matrix_ring(R, n, [[(i, j)] for i in range(n) for j in range(n)], "Full",
                             name=f"m{n}({R.name})")


def upper_triangular(R: FiniteRing, n: int) -> FiniteRing:
    return build_matrix_ring(R, n, _upper_positions(n), "UpperTriangular",
                             name=f"t{n}({R.name})")


H3_POSITIONS = [(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)]


def h3(R: FiniteRing) -> FiniteRing:
    """3x3 matrices supported on (1,1), (2,1), (2,2), (2,3), (3,3)."""
    return build_matrix_ring(R, 3, [[p] for p in H3_POSITIONS], "H3", name=f"h3({R.name})")


def _check_endo(R: FiniteRing, endo: RingMap | None) -> RingMap:
    endo = endo or identity_map(R)
    if endo.source is not R or endo.target is not R:
        raise RingError("endomorphism must map the base ring to itself")
    bad = endo.violations(unital=True)
    if bad:
        raise RingError("invalid endomorphism: " + ", ".join(bad))
    return endo


def _endo_name(endo: RingMap | None, given: str | None) -> str:
    if given:
        return given
    if endo is None or endo.table == tuple(range(endo.source.order)):
        return "id"
    return "endo"


def skew_upper_triangular(R: FiniteRing, n: int, endo: RingMap | None = None,
                          endo_name: str | None = None) -> FiniteRing:
    endo = _check_endo(R, endo)
    return build_matrix_ring(R, n, _upper_positions(n), "SkewUpperTriangular", endo,
                             name=f"skewT{n}({R.name},{_endo_name(endo, endo_name)})")


def s_ring(R: FiniteRing, n: int, endo: RingMap | None = None, endo_name=None) -> FiniteRing:
    """Skew triangular matrices with constant main diagonal."""
    endo = _check_endo(R, endo)
    params = [[(i, i) for i in range(n)]] + [[(i, j)] for i in range(n) for j in range(i + 1, n)]
    return build_matrix_ring(R, n, params, "ConstMainDiagonal", endo,
                             name=f"s({R.name},{n},{_endo_name(endo, endo_name)})")


def t_ring(R: FiniteRing, n: int, endo: RingMap | None = None, endo_name=None) -> FiniteRing:
    """Skew triangular matrices that are constant along every diagonal.

    Parameter ``d`` is the value on the d-th superdiagonal, so element
    digits read ``(a_0, ..., a_{n-1})``.
    """
    endo = _check_endo(R, endo)
    params = [[(i, i + d) for i in range(n - d)] for d in range(n)]
    return build_matrix_ring(R, n, params, "ConstAllDiagonals", endo,
                             name=f"t({R.name},{n},{_endo_name(endo, endo_name)})")


def _a_params(n: int) -> list:
    half = n // 2
    params = [[(i, i + d) for i in range(n - d)] for d in range(half)]
    params += [[(i, i + d)] for d in range(half, n) for i in range(n - d)]
    return params


def a_ring(R: FiniteRing, n: int, endo: RingMap | None = None, endo_name=None) -> FiniteRing:
    """Diagonals 0..floor(n/2)-1 constant, the remaining entries free."""
    endo = _check_endo(R, endo)
    return build_matrix_ring(R, n, _a_params(n), "HalfConstDiagonals", endo,
                             name=f"a({R.name},{n},{_endo_name(endo, endo_name)})")


def b_ring(R: FiniteRing, n: int, endo: RingMap | None = None, endo_name=None) -> FiniteRing:
    """``A(R, n) + R E_{1k}`` for ``n = 2k >= 4``: the (1, k) entry is freed."""
    if n < 4 or n % 2:
        raise RingError("B(R, n, endo) needs n = 2k >= 4")
    endo = _check_endo(R, endo)
    k = n // 2
    corner = (0, k - 1)
    params = []
    for pos in _a_params(n):
        if corner in pos:
            rest = [p for p in pos if p != corner]
            params.append(rest)
            params.append([corner])
        else:
            params.append(pos)
    return build_matrix_ring(R, n, params, "HalfConstPlusCorner", endo,
                             name=f"b({R.name},{n},{_endo_name(endo, endo_name)})")


def skew_poly_quotient(R: FiniteRing, n: int, endo: RingMap | None = None) -> FiniteRing:
    """``R[x, endo] / (x^n)`` from the polynomial rule ``x r = endo(r) x``.

    Elements are coefficient tuples ``(a_0, ..., a_{n-1})``.  This does not
    go through matrices at all.
    """
    endo = _check_endo(R, endo)
    q = R.order
    size = q ** n
    if size > TABLE_CAP:
        raise SizeCapExceeded(f"R[x]/(x^{n}) would have order {size}")
    coeffs = _mixed_radix([q] * n)
    powers = [np.arange(q)]
    e = np.asarray(endo.table)
    for _ in range(n):
        powers.append(e[powers[-1]])
    add = encode_tuples(R.add[coeffs[:, None], coeffs[None, :]], [q] * n)
    prod = np.full((size, size, n), R.zero, dtype=np.int64)
    for i in range(n):
        for j in range(n - i):
            term = R.mul[coeffs[:, None, i], powers[i][coeffs[None, :, j]]]
            prod[..., i + j] = R.add[prod[..., i + j], term]
    mul = encode_tuples(prod, [q] * n)
    zero = int(encode_tuples(np.full(n, R.zero), [q] * n))
    one = int(encode_tuples(np.array([R.one] + [R.zero] * (n - 1)), [q] * n))
    labels = [" + ".join(f"{R.labels[c]}x^{i}" for i, c in enumerate(t)) for t in coeffs]
    return make_ring(add, mul, zero, one, labels, f"{R.name}[x]/(x^{n})")


def skew_poly_quotient_iso(R: FiniteRing, n: int, endo: RingMap | None = None) -> bool:
    """Check that coefficient tuple -> constant-diagonal matrix is a ring isomorphism."""
    P = skew_poly_quotient(R, n, endo)
    T = t_ring(R, n, endo)
    shape: MatrixShape = T.structure
    phi = np.empty(P.order, dtype=np.int64)
    coeffs = _mixed_radix([R.order] * n)
    for x, c in enumerate(coeffs):
        m = np.full((n, n), R.zero, dtype=np.int64)
        for d in range(n):
            for i in range(n - d):
                m[i, i + d] = c[d]
        phi[x] = shape.index_of(m)
    if len(set(phi.tolist())) != P.order:
        return False
    return (np.array_equal(phi[P.mul], T.mul[phi[:, None], phi[None, :]])
            and np.array_equal(phi[P.add], T.add[phi[:, None], phi[None, :]])
            and phi[P.one] == T.one)


def t_ring_convolution(R: FiniteRing, endo: RingMap, a, b) -> tuple:
    """Product in T(R, n, endo) by the displayed convolution formula.

    ``(a_0..a_{n-1})(b_0..b_{n-1})`` has entry ``k`` equal to the sum of
    ``a_i * endo^i(b_j)`` over ``i + j = k``.
    """
    n = len(a)
    out = []
    for k in range(n):
        s = R.zero
        for i in range(k + 1):
            s = int(R.add[s, R.mul[a[i], endo.power(i)(b[k - i])]])
        out.append(s)
    return tuple(out)


# -- radical formulas -------------------------------------------------------

@dataclass(frozen=True)
class FormulaCheck:
    equal: bool
    formula: frozenset
    oracle: frozenset

    @property
    def symmetric_difference(self) -> frozenset:
        return self.formula ^ self.oracle

    def __bool__(self):
        return self.equal


def _formula_set(M: FiniteRing, diag_ok) -> frozenset:
    shape: MatrixShape = M.structure
    out = []
    for x in M.elements:
        m = shape.matrix(x)
        if diag_ok(m):
            out.append(x)
    return frozenset(out)


def diagonal_radical_formula(M: FiniteRing, base_radical: frozenset | None = None) -> frozenset:
    """Matrices of ``M`` whose diagonal entries all lie in ``N_*(base)``."""
    shape: MatrixShape = M.structure
    rad = base_radical if base_radical is not None else lower_nilradical_msequence(shape.base)
    return _formula_set(M, lambda m: all(int(m[i, i]) in rad for i in range(shape.n)))


def radical_formula_check_Tn(R: FiniteRing, n: int) -> FormulaCheck:
    T = upper_triangular(R, n)
    f = diagonal_radical_formula(T)
    o = lower_nilradical_msequence(T)
    return FormulaCheck(f == o, f, o)


def radical_formula_check_H3(R: FiniteRing) -> FormulaCheck:
    # the off-diagonal positions (2,1) and (2,3) are unconstrained
    H = h3(R)
    f = diagonal_radical_formula(H)
    o = lower_nilradical_msequence(H)
    return FormulaCheck(f == o, f, o)


def radical_formula_check_skew(R: FiniteRing, n: int, endo: RingMap | None = None) -> FormulaCheck:
    T = skew_upper_triangular(R, n, endo)
    f = diagonal_radical_formula(T)
    o = lower_nilradical_msequence(T)
    return FormulaCheck(f == o, f, o)


# -- embeddings -------------------------------------------------------------

def scalar_embedding(R: FiniteRing, M: FiniteRing) -> RingMap:
    """``a -> a I`` into a matrix ring containing the scalar matrices."""
    shape: MatrixShape = M.structure
    table = []
    for a in R.elements:
        m = np.full((shape.n, shape.n), R.zero, dtype=np.int64)
        for i in range(shape.n):
            m[i, i] = a
        table.append(shape.index_of(m))
    return RingMap(R, M, tuple(table))


def entry_projection(M: FiniteRing, p: int) -> RingMap:
    """``m -> m_pp``; a ring map for triangular shapes (and H3)."""
    shape: MatrixShape = M.structure
    return RingMap(M, shape.base, tuple(int(shape.matrix(x)[p, p]) for x in M.elements))


def block_diagonal_embedding(A: FiniteRing, B: FiniteRing) -> RingMap:
    """``X -> diag(X, X)`` from an n x n shape into a 2n x 2n shape (or scalars)."""
    target: MatrixShape = B.structure
    src: MatrixShape | None = A.structure if isinstance(A.structure, MatrixShape) else None
    table = []
    for x in A.elements:
        if src is None:
            X = np.array([[x]])
        else:
            X = src.matrix(x)
        k = X.shape[0]
        if 2 * k != target.n:
            raise RingError("block embedding needs the target to be twice the size")
        m = np.full((target.n, target.n), target.base.zero, dtype=np.int64)
        m[:k, :k] = X
        m[k:, k:] = X
        table.append(target.index_of(m))
    return RingMap(A, B, tuple(table))


def canonical_inclusion(sub: FiniteRing, ambient: FiniteRing) -> RingMap:
    """Entry-preserving inclusion between two matrix shapes of the same size."""
    s: MatrixShape = sub.structure
    a: MatrixShape = ambient.structure
    return RingMap(sub, ambient, tuple(a.index_of(s.matrix(x)) for x in sub.elements))


# -- finite direct systems --------------------------------------------------

@dataclass(frozen=True)
class ChainStage:
    ring: str
    order: int
    classes: dict
    lower: int
    radical_transported: bool | None


@dataclass(frozen=True)
class ChainReport:
    stages: tuple

    @property
    def transported(self) -> bool:
        return all(s.radical_transported is not False for s in self.stages)

    def to_dict(self) -> dict:
        return {"stages": [s.__dict__ for s in self.stages], "transported": self.transported}


def direct_limit_chain(rings, maps) -> ChainReport:
    """Check a finite prefix ``R_0 -> R_1 -> ...`` of a direct system.

    Every map must be an injective unital homomorphism between consecutive
    rings; each stage reports its class flags and whether the previous
    prime radical lands inside its own.
    """
    from .radicals import class_predicates

    rings, maps = list(rings), list(maps)
    if len(maps) != len(rings) - 1:
        raise RingError("a chain of k rings needs k - 1 maps")
    for i, f in enumerate(maps):
        if f.source is not rings[i] or f.target is not rings[i + 1]:
            raise RingError(f"map {i} does not connect stage {i} to stage {i + 1}")
        if not (f.is_injective() and f.is_homomorphism(unital=True)):
            raise RingError(f"map {i} is not an injective unital homomorphism")
    stages = []
    prev = None
    for i, R in enumerate(rings):
        rad = lower_nilradical_msequence(R)
        moved = None
        if i > 0:
            moved = all(maps[i - 1](x) in rad for x in prev)
        stages.append(ChainStage(R.name, R.order, class_predicates(R).as_dict(), len(rad), moved))
        prev = rad
    return ChainReport(tuple(stages))


def diagonal_embedding(R: FiniteRing, P: FiniteRing) -> RingMap:
    """``a -> (a, ..., a)`` into a direct power of ``R``."""
    s = P.structure
    if not (isinstance(s, tuple) and s[0] == "product"):
        raise RingError(f"{P.name} is not a direct product")
    orders = [f.order for f in s[1]]
    table = [int(encode_tuples(np.full(len(orders), a), orders)) for a in R.elements]
    return RingMap(R, P, tuple(table))
