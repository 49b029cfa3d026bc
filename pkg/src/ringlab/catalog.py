"""Built-in rings, monoids and endomorphisms, addressed by stable names.

Ring names compose: ``z12``, ``z2xz4``, ``t2(z4)``, ``m2(z2)``, ``h3(z2)``,
``t(z2,3,id)``, ``s(z2xz2,3,swap)``, ``a(z2,4,id)``, ``b(z2,4,id)``,
``skewT2(z2xz2,swap)`` and finite monoid rings such as ``z2[c2]``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from . import constructions as C
from .monoid_ring import finite_monoid_ring
from .monoids import MONOID_CATALOG, Monoid, monoid_by_name
from .rings import (FiniteRing, RingError, RingMap, direct_product, identity_map, make_ring_map,
                    make_zmod)

CATALOG_RINGS = (
    "z2", "z3", "z4", "z8", "z9", "z12", "z2xz2", "z2xz4",
    "t2(z2)", "t2(z4)", "t3(z2)", "m2(z2)", "h3(z2)",
    "t(z2,3,id)", "s(z2,3,id)", "a(z2,4,id)", "b(z2,4,id)", "skewT2(z2xz2,swap)",
    "t(z2xz2,2,swap)",
)

CATALOG_MONOIDS = MONOID_CATALOG

CATALOG_ENDOMORPHISMS = {"id": "identity on any ring", "swap": "(a,b) -> (b,a) on a square product"}


class CatalogError(KeyError):
    pass


def _split_args(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            parts.append(cur.strip())
            cur = ""
            continue
        depth += ch in "(["
        depth -= ch in ")]"
        cur += ch
    parts.append(cur.strip())
    return parts


def endomorphism(R: FiniteRing, name: str) -> RingMap:
    if name == "id":
        return identity_map(R)
    if name == "swap":
        s = R.structure
        if not (isinstance(s, tuple) and s[0] == "product" and len(s[1]) == 2
                and s[1][0].same_tables(s[1][1])):
            raise CatalogError(f"swap needs a square product ring, got {R.name}")
        q = s[1][0].order
        table = [(x % q) * q + x // q for x in R.elements]
        return make_ring_map(R, R, table)
    raise CatalogError(f"unknown endomorphism {name!r}")


def _split_product(name: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in name:
        if ch == "x" and depth == 0 and cur and re.fullmatch(r".*[\d)\]]", cur):
            parts.append(cur)
            cur = ""
            continue
        depth += ch in "(["
        depth -= ch in ")]"
        cur += ch
    parts.append(cur)
    return parts


@lru_cache(maxsize=None)
def ring(name: str) -> FiniteRing:
    """Build (and cache) a ring from its catalog name."""
    name = name.replace(" ", "")
    parts = _split_product(name)
    if len(parts) > 1:
        return direct_product([ring(p) for p in parts], name)
    m = re.fullmatch(r"z(\d+)", name)
    if m:
        return make_zmod(int(m.group(1)))
    m = re.fullmatch(r"(.+)\[([^\[\]]+)\]", name)
    if m:
        return finite_monoid_ring(ring(m.group(1)), monoid(m.group(2)), name)
    m = re.fullmatch(r"([tm])(\d+)\((.+)\)", name)
    if m:
        base, n = ring(m.group(3)), int(m.group(2))
        R = C.upper_triangular(base, n) if m.group(1) == "t" else C.full_matrix(base, n)
        return _renamed(R, name)
    m = re.fullmatch(r"h3\((.+)\)", name)
    if m:
        return _renamed(C.h3(ring(m.group(1))), name)
    m = re.fullmatch(r"skewT(\d+)\((.+)\)", name)
    if m:
        base_name, endo_name = _split_args(m.group(2))
        base = ring(base_name)
        R = C.skew_upper_triangular(base, int(m.group(1)), endomorphism(base, endo_name), endo_name)
        return _renamed(R, name)
    m = re.fullmatch(r"([stab])\((.+)\)", name)
    if m:
        args = _split_args(m.group(2))
        if len(args) != 3:
            raise CatalogError(f"{name}: expected (ring, n, endomorphism)")
        base = ring(args[0])
        build = {"s": C.s_ring, "t": C.t_ring, "a": C.a_ring, "b": C.b_ring}[m.group(1)]
        return _renamed(build(base, int(args[1]), endomorphism(base, args[2]), args[2]), name)
    raise CatalogError(f"unknown ring {name!r}")


def _renamed(R: FiniteRing, name: str) -> FiniteRing:
    if R.name == name:
        return R
    return FiniteRing(R.order, R.add, R.mul, R.neg, R.zero, R.one, R.labels, name, R.structure)


@lru_cache(maxsize=None)
def monoid(name: str) -> Monoid:
    return monoid_by_name(name)


def is_chain_ring_name(name: str) -> bool:
    from .radicals import is_chain_ring
    return is_chain_ring(ring(name))


def catalog() -> dict:
    """Listing of the built-in objects with basic invariants."""
    from .radicals import is_chain_ring
    rings = []
    for n in CATALOG_RINGS:
        R = ring(n)
        rings.append({"name": n, "order": R.order, "commutative": R.is_commutative(),
                      "chain_ring": is_chain_ring(R)})
    monoids = []
    for n in CATALOG_MONOIDS:
        M = monoid(n)
        entry = {"name": n, "kind": M.kind, "finite": M.is_finite(), "up": M.up_status}
        if M.is_finite():
            from .monoids import as_table
            entry["order"] = len(as_table(M)[0])
        monoids.append(entry)
    endos = [{"name": k, "description": v} for k, v in CATALOG_ENDOMORPHISMS.items()]
    return {"rings": rings, "monoids": monoids, "endomorphisms": endos}


def catalog_rings(max_order: int | None = None) -> list[FiniteRing]:
    out = []
    for n in CATALOG_RINGS:
        R = ring(n)
        if max_order is None or R.order <= max_order:
            out.append(R)
    return out


__all__ = ["CATALOG_RINGS", "CATALOG_MONOIDS", "CatalogError", "RingError", "catalog",
           "catalog_rings", "endomorphism", "monoid", "ring"]
