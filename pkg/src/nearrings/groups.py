"""Finite groups as explicit Cayley tables, with element 0 the neutral element.

All tables are index-based; names are display-only. The supported spec
grammar is "Z<n>", "Z<a>xZ<b>[xZ<c>...]", "D<m>" (dihedral of order m, m
even), "Q8", "S3", or a raw ``{"order": n, "add": [[...]]}`` table. Orders
are capped at MAX_ORDER so full triple scans stay trivial.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import lcm

from .errors import AxiomViolation, InputError, PreconditionError

MAX_ORDER = 16

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on elements 0..order-1; add[x][y] is the sum x+y."""

    order: int
    add: Table
    names: tuple[str, ...]
    spec: str | None = None
    generators: tuple[int, ...] = ()

    @cached_property
    def neg(self) -> tuple[int, ...]:
        """Additive inverse of each element."""
        inv = [0] * self.order
        for x in range(self.order):
            for y in range(self.order):
                if self.add[x][y] == 0:
                    inv[x] = y
                    break
        return tuple(inv)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        """Additive order of each element."""
        out = []
        for x in range(self.order):
            acc, k = x, 1
            while acc != 0:
                acc = self.add[acc][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def abelian(self) -> bool:
        a = self.add
        return all(a[x][y] == a[y][x] for x in range(self.order) for y in range(self.order))

    def label(self) -> str:
        return self.spec if self.spec is not None else f"raw[{self.order}]"


@dataclass(frozen=True)
class GroupMap:
    """A homomorphism between groups, stored as its image vector."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other: x goes through `other` first, then `self`."""
        return GroupMap(other.source, self.target,
                        tuple(self.images[y] for y in other.images))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]  # sorted


def is_homomorphism(source: FiniteGroup, target: FiniteGroup, images: tuple[int, ...]) -> bool:
    if images[0] != 0:
        return False
    n = source.order
    return all(
        images[source.add[x][y]] == target.add[images[x]][images[y]]
        for x in range(n)
        for y in range(n)
    )


# -- construction ------------------------------------------------------------

def _validate_table(add: Table) -> None:
    """Check the full group axioms, raising AxiomViolation with a witness."""
    n = len(add)
    full = set(range(n))
    for x in range(n):
        if len(add[x]) != n:
            raise InputError(f"row {x} has length {len(add[x])}, expected {n}")
        for y in range(n):
            v = add[x][y]
            if not (0 <= v < n):
                raise InputError(f"entry add[{x}][{y}]={v} out of range 0..{n - 1}")
    for x in range(n):
        if set(add[x]) != full:
            raise AxiomViolation("latin-square", (x,), f"row {x} is not a permutation")
        if {add[y][x] for y in range(n)} != full:
            raise AxiomViolation("latin-square", (x,), f"column {x} is not a permutation")
    for x in range(n):
        if add[0][x] != x or add[x][0] != x:
            raise AxiomViolation("identity", (x,), "element 0 is not neutral")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    raise AxiomViolation("associativity", (x, y, z))
    for x in range(n):
        if all(add[x][y] != 0 for y in range(n)):
            raise AxiomViolation("inverses", (x,), f"element {x} has no inverse")


def _closure(add: Table, seed: frozenset[int]) -> frozenset[int]:
    """Closure of a subset under addition (inverses follow at finite order)."""
    members = set(seed) | {0}
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for z in (add[x][y], add[y][x]):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return frozenset(members)


def _greedy_generators(add: Table) -> tuple[int, ...]:
    n = len(add)
    gens: list[int] = []
    covered = _closure(add, frozenset())
    while len(covered) < n:
        x = min(set(range(n)) - covered)
        gens.append(x)
        covered = _closure(add, covered | {x})
    return tuple(gens)


def _cyclic(n: int) -> FiniteGroup:
    add = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    gens = (1,) if n > 1 else ()
    return FiniteGroup(n, add, tuple(str(x) for x in range(n)), f"Z{n}", gens)


def _product(factors: list[int], spec: str) -> FiniteGroup:
    tuples = list(itertools.product(*(range(f) for f in factors)))
    index = {t: i for i, t in enumerate(tuples)}
    n = len(tuples)
    add = tuple(
        tuple(index[tuple((a + b) % f for a, b, f in zip(s, t, factors))] for t in tuples)
        for s in tuples
    )
    names = tuple("(" + ",".join(map(str, t)) + ")" for t in tuples)
    gens = []
    for pos in range(len(factors)):
        unit = tuple(1 if i == pos else 0 for i in range(len(factors)))
        if factors[pos] > 1:
            gens.append(index[unit])
    return FiniteGroup(n, add, names, spec, tuple(gens))


def _dihedral(m: int, spec: str, names: tuple[str, ...] | None = None) -> FiniteGroup:
    """Dihedral group of order m = 2k: indices 0..k-1 are j*a, k..m-1 are j*a+b.

    Written additively: a has order k, b has order 2, and b+a+b = -a.
    """
    k = m // 2

    def enc(j: int, r: int) -> int:
        return j % k + (k if r else 0)

    def plus(x: int, y: int) -> int:
        j1, r1 = x % k, x // k
        j2, r2 = y % k, y // k
        if r1 == 0:
            return enc(j1 + j2, r2)
        return enc(j1 - j2, 1 - r2)

    add = tuple(tuple(plus(x, y) for y in range(m)) for x in range(m))
    if names is None:
        rot = ["0"] + [f"{j}a" if j > 1 else "a" for j in range(1, k)]
        ref = ["b"] + [f"{j}a+b" if j > 1 else "a+b" for j in range(1, k)]
        names = tuple(rot + ref)
    gens = (1, k) if k > 1 else (1,)
    return FiniteGroup(m, add, names, spec, gens)


def _symmetric3() -> FiniteGroup:
    # Element ordering 0, a, 2a, b, a+b, 2a+b with a of order 3, b of order 2.
    g = _dihedral(6, "S3", names=("0", "a", "2a", "b", "a+b", "2a+b"))
    return g


def _quaternion() -> FiniteGroup:
    # 0-based encoding of {1, -1, i, -i, j, -j, k, -k} under quaternion product.
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    basis = {0: "1", 1: "i", 2: "j", 3: "k"}
    prod = {}  # (unit, unit) -> (sign, unit) on basis symbols 1,i,j,k
    for u in range(4):
        prod[(0, u)] = (1, u)
        prod[(u, 0)] = (1, u)
    for u in (1, 2, 3):
        prod[(u, u)] = (-1, 0)
    prod[(1, 2)] = (1, 3)
    prod[(2, 3)] = (1, 1)
    prod[(3, 1)] = (1, 2)
    prod[(2, 1)] = (-1, 3)
    prod[(3, 2)] = (-1, 1)
    prod[(1, 3)] = (-1, 2)

    def enc(sign: int, u: int) -> int:
        return 2 * u + (0 if sign == 1 else 1)

    def mulq(x: int, y: int) -> int:
        sx, ux = (1 if x % 2 == 0 else -1), x // 2
        sy, uy = (1 if y % 2 == 0 else -1), y // 2
        s, u = prod[(ux, uy)]
        return enc(s * sx * sy, u)

    add = tuple(tuple(mulq(x, y) for y in range(8)) for x in range(8))
    return FiniteGroup(8, add, names, "Q8", (2, 4))  # generated by i and j


_SPEC_RE = re.compile(r"^(Z\d+(?:xZ\d+)*|D\d+|Q8|S3)$")


def build_group(spec) -> FiniteGroup:
    """Build a group from a spec string or a raw {"order", "add"} table.

    Named specs come with a documented fixed element ordering: cyclic groups
    list residues 0..n-1, products list lexicographic tuples, S3 uses the
    ordering 0, a, 2a, b, a+b, 2a+b.
    """
    if isinstance(spec, dict):
        return build_raw_group(spec)
    if not isinstance(spec, str):
        raise InputError(f"group spec must be a string or table object, got {type(spec).__name__}")
    s = spec.strip()
    if not _SPEC_RE.match(s):
        raise InputError(f"unknown group spec {spec!r}")
    if s == "S3":
        return _symmetric3()
    if s == "Q8":
        return _quaternion()
    if s.startswith("D"):
        m = int(s[1:])
        if m < 2 or m % 2 != 0:
            raise InputError(f"dihedral spec {spec!r} needs an even order >= 2")
        if m > MAX_ORDER:
            raise InputError(f"order {m} exceeds the maximum supported order {MAX_ORDER}")
        return _dihedral(m, s)
    factors = [int(p[1:]) for p in s.split("x")]
    if any(f < 1 for f in factors):
        raise InputError(f"cyclic factors must be positive in {spec!r}")
    order = 1
    for f in factors:
        order *= f
    if order > MAX_ORDER:
        raise InputError(f"order {order} exceeds the maximum supported order {MAX_ORDER}")
    if len(factors) == 1:
        return _cyclic(factors[0])
    return _product(factors, s)


def build_raw_group(obj: dict) -> FiniteGroup:
    """Build and fully validate a group from an explicit table object."""
    if "order" not in obj or "add" not in obj:
        raise InputError('raw group object needs "order" and "add" fields')
    n = obj["order"]
    if not isinstance(n, int) or n < 1 or n > MAX_ORDER:
        raise InputError(f"order must be an integer in 1..{MAX_ORDER}, got {n!r}")
    rows = obj["add"]
    if not isinstance(rows, list) or len(rows) != n:
        raise InputError(f'"add" must be a list of {n} rows')
    try:
        add = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise InputError(f'"add" entries must be integers: {exc}') from exc
    _validate_table(add)
    names = tuple(str(x) for x in range(n))
    return FiniteGroup(n, add, names, None, _greedy_generators(add))


def assert_valid(g: FiniteGroup) -> None:
    """Re-run the full group axioms on an existing value (used by tests)."""
    _validate_table(g.add)


# -- spec operations ---------------------------------------------------------

def element_order(g: FiniteGroup, x: int) -> int:
    if not (0 <= x < g.order):
        raise InputError(f"element {x} out of range for order-{g.order} group")
    return g.orders[x]


def exponent(g: FiniteGroup) -> int:
    return lcm(*g.orders)


def is_abelian(g: FiniteGroup) -> bool:
    return g.abelian


def times(g: FiniteGroup, x: int, n: int) -> int:
    """The n-fold sum x + x + ... + x (n taken modulo the order of x)."""
    acc = 0
    for _ in range(n % g.orders[x]):
        acc = g.add[acc][x]
    return acc


@lru_cache(maxsize=None)
def _endomorphism_images(g: FiniteGroup, invertible_only: bool) -> tuple[tuple[int, ...], ...]:
    n = g.order
    add = g.add
    gens = g.generators
    results: list[tuple[int, ...]] = []

    def close(mapping: dict[int, int], x0: int, u0: int) -> dict[int, int] | None:
        out = dict(mapping)
        stack = [(x0, u0)]
        while stack:
            y, v = stack.pop()
            cur = out.get(y)
            if cur is not None:
                if cur != v:
                    return None
                continue
            out[y] = v
            for z, w in list(out.items()):
                stack.append((add[y][z], add[v][w]))
                stack.append((add[z][y], add[w][v]))
        return out

    def extend(k: int, mapping: dict[int, int]) -> None:
        if k == len(gens):
            assert len(mapping) == n, "generating set does not generate"
            results.append(tuple(mapping[x] for x in range(n)))
            return
        x = gens[k]
        for u in range(n):
            if g.orders[x] % g.orders[u] != 0:
                continue  # image order must divide generator order
            nxt = close(mapping, x, u)
            if nxt is not None:
                extend(k + 1, nxt)

    extend(0, {0: 0})
    out = sorted(set(results))
    if invertible_only:
        out = [im for im in out if len(set(im)) == n]
    return tuple(out)


def endomorphisms(g: FiniteGroup, invertible_only: bool = False) -> list[GroupMap]:
    """All additive endomorphisms (automorphisms if invertible_only) of g.

    Computed by assigning images on the stored generating set and closing
    each partial assignment under the addition law, so the work is bounded
    by |G|^(#generators) roots instead of the |G|^|G| raw function space.
    Result is deduplicated and sorted by image vector.
    """
    return [GroupMap(g, g, im) for im in _endomorphism_images(g, invertible_only)]


def subgroups(g: FiniteGroup, normal_only: bool = False) -> list[Subgroup]:
    """All subgroups (or all normal subgroups), sorted by (size, members)."""
    found = {_closure(g.add, frozenset())}
    frontier = list(found)
    while frontier:
        fresh = []
        for s in frontier:
            for x in range(g.order):
                if x in s:
                    continue
                t = _closure(g.add, s | {x})
                if t not in found:
                    found.add(t)
                    fresh.append(t)
        frontier = fresh
    sets = sorted(found, key=lambda s: (len(s), sorted(s)))
    if normal_only:
        sets = [s for s in sets if _is_normal(g, s)]
    return [Subgroup(g, tuple(sorted(s))) for s in sets]


def _is_normal(g: FiniteGroup, members: frozenset[int]) -> bool:
    add, neg = g.add, g.neg
    return all(add[add[h][a]][neg[h]] in members for h in range(g.order) for a in members)


def is_subgroup(g: FiniteGroup, members) -> bool:
    s = set(members)
    if 0 not in s or not s <= set(range(g.order)):
        return False
    return all(g.add[a][b] in s for a in s for b in s)


def is_normal_subgroup(g: FiniteGroup, members) -> bool:
    return is_subgroup(g, members) and _is_normal(g, frozenset(members))


def p_component(g: FiniteGroup, p: int) -> Subgroup:
    """The subgroup of all elements of p-power order in an abelian group."""
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise InputError(f"{p} is not a prime")
    if not g.abelian:
        raise PreconditionError("p-components are only defined for abelian groups")

    def p_power(o: int) -> bool:
        while o % p == 0:
            o //= p
        return o == 1

    members = tuple(x for x in range(g.order) if p_power(g.orders[x]))
    return Subgroup(g, members)


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
