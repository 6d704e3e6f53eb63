"""Validated nearring values, property predicates, ideals, modules, builtins.

A (left) nearring here is a group together with an associative
multiplication table satisfying the left distributive law
x(y+z) = xy + xz. Values are immutable after validation and every
predicate is a pure function of the tables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import AxiomViolation, InputError, InvariantViolation, PreconditionError
from .groups import (
    FiniteGroup,
    GroupMap,
    Table,
    build_group,
    is_homomorphism,
    subgroups,
)


@dataclass(frozen=True)
class PropertyFlags:
    zero_symmetric: bool
    semidistributive: bool
    distributive: bool
    has_identity: bool
    abelian_addition: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "zero_symmetric": self.zero_symmetric,
            "semidistributive": self.semidistributive,
            "distributive": self.distributive,
            "has_identity": self.has_identity,
            "abelian_addition": self.abelian_addition,
        }


@dataclass(frozen=True)
class CandidateMultiplication:
    """A multiplication table awaiting validation; only index ranges hold."""

    group: FiniteGroup
    mul: Table

    def __post_init__(self):
        n = self.group.order
        if len(self.mul) != n:
            raise InputError(f"mul has {len(self.mul)} rows, expected {n}")
        for x, row in enumerate(self.mul):
            if len(row) != n:
                raise InputError(f"mul row {x} has length {len(row)}, expected {n}")
            for y, v in enumerate(row):
                if not (0 <= v < n):
                    raise InputError(f"mul[{x}][{y}]={v} out of range 0..{n - 1}")


@dataclass(frozen=True)
class Nearring:
    """A validated nearring: additive group, multiplication, cached flags."""

    group: FiniteGroup
    mul: Table
    identity: int | None
    flags: PropertyFlags
    name: str | None = None
    # descriptive metadata (e.g. the composition order chosen for function
    # nearrings); not part of the value's identity and not serialized
    extra: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return self.group.order

    def label(self) -> str:
        return self.name if self.name else f"nearring-on-{self.group.label()}"


@dataclass(frozen=True)
class RModule:
    """A group with a right nearring action: action[g][r] is g acted on by r."""

    carrier: FiniteGroup
    ring: Nearring
    action: Table


@dataclass(frozen=True)
class TranslationEmbedding:
    """Left translations y -> s*y of a nearring with identity, as group maps.

    `composition_rule` records whether composing translations (right map
    applied first) matches the translation of s*t, of t*s, or both.
    """

    ring: Nearring
    translations: tuple[GroupMap, ...]
    unit_translations: tuple[GroupMap, ...]
    composition_rule: str


# -- validation and classification -------------------------------------------

def _first_associativity_failure(group: FiniteGroup, mul: Table) -> tuple[int, int, int] | None:
    n = group.order
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    return (x, y, z)
    return None


def _first_left_distributivity_failure(group: FiniteGroup, mul: Table) -> tuple[int, int, int] | None:
    n = group.order
    add = group.add
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    return (x, y, z)
    return None


def find_identity(group: FiniteGroup, mul: Table) -> int | None:
    """The unique two-sided multiplicative identity, if one exists."""
    n = group.order
    for i in range(n):
        if all(mul[i][x] == x and mul[x][i] == x for x in range(n)):
            return i
    return None


def is_right_distributive(group: FiniteGroup, mul: Table) -> bool:
    n, add = group.order, group.add
    return all(
        mul[add[r][s]][t] == add[mul[r][t]][mul[s][t]]
        for r in range(n) for s in range(n) for t in range(n)
    )


def is_left_distributive(group: FiniteGroup, mul: Table) -> bool:
    return _first_left_distributivity_failure(group, mul) is None


def classify_table(group: FiniteGroup, mul: Table, identity: int | None = None) -> PropertyFlags:
    """Compute all property flags from the tables alone."""
    n, add = group.order, group.add
    zero_symmetric = all(mul[0][x] == 0 for x in range(n))
    semidistributive = all(
        mul[add[add[r][s]][r]][t] == add[add[mul[r][t]][mul[s][t]]][mul[r][t]]
        for r in range(n) for s in range(n) for t in range(n)
    )
    distributive = is_right_distributive(group, mul)
    if identity is None:
        identity = find_identity(group, mul)
    return PropertyFlags(
        zero_symmetric=zero_symmetric,
        semidistributive=semidistributive,
        distributive=distributive,
        has_identity=identity is not None,
        abelian_addition=group.abelian,
    )


def validate(candidate: CandidateMultiplication, name: str | None = None,
             extra: tuple[tuple[str, str], ...] = ()) -> Nearring:
    """Check the nearring axioms and build a Nearring with computed flags.

    The axiom scans report the first failing triple in row-major order,
    associativity before left distributivity.
    """
    group, mul = candidate.group, candidate.mul
    triple = _first_associativity_failure(group, mul)
    if triple is not None:
        x, y, z = triple
        raise AxiomViolation(
            "associativity", triple,
            f"({x}*{y})*{z} = {mul[mul[x][y]][z]} but {x}*({y}*{z}) = {mul[x][mul[y][z]]}")
    triple = _first_left_distributivity_failure(group, mul)
    if triple is not None:
        x, y, z = triple
        lhs = mul[x][group.add[y][z]]
        rhs = group.add[mul[x][y]][mul[x][z]]
        raise AxiomViolation(
            "left-distributivity", triple,
            f"{x}*({y}+{z}) = {lhs} but {x}*{y} + {x}*{z} = {rhs}")
    # x*0 = 0 is forced by left distributivity; assert it directly anyway.
    for x in range(group.order):
        if mul[x][0] != 0:
            raise AxiomViolation("right-absorbing-zero", (x, 0))
    identity = find_identity(group, mul)
    flags = classify_table(group, mul, identity)
    return Nearring(group, mul, identity, flags, name, extra)


def build_unchecked(group: FiniteGroup, mul, name: str | None = None,
                    flags: PropertyFlags | None = None) -> Nearring:
    """Assemble a Nearring WITHOUT verifying the nearring axioms.

    Identity and flags are still computed from the tables unless an
    explicit `flags` override is given. This exists for diagnostic flows
    and fault-injection tests that need axiom-violating tables to reach
    the theorem checkers; it must never be used on untrusted input paths
    that promise validated values.
    """
    table = tuple(tuple(int(v) for v in row) for row in mul)
    CandidateMultiplication(group, table)  # range/shape check only
    identity = find_identity(group, table)
    if flags is None:
        flags = classify_table(group, table, identity)
    return Nearring(group, table, identity, flags, name)


def classify(r: Nearring) -> PropertyFlags:
    """Recompute the property flags from the tables (ignores the cache)."""
    return classify_table(r.group, r.mul, r.identity)


# -- element-level predicates -------------------------------------------------

def units(r: Nearring) -> tuple[int, ...]:
    """All elements with a two-sided multiplicative inverse."""
    if r.identity is None:
        raise PreconditionError("units are only defined for nearrings with identity")
    i = r.identity
    n = r.order
    out = [x for x in range(n)
           if any(r.mul[x][y] == i and r.mul[y][x] == i for y in range(n))]
    return tuple(out)


def distributive_elements(r: Nearring) -> tuple[int, ...]:
    """All t such that (r+s)t = rt + st for every pair r, s."""
    n, add, mul = r.order, r.group.add, r.mul
    out = [
        t for t in range(n)
        if all(mul[add[a][b]][t] == add[mul[a][t]][mul[b][t]]
               for a in range(n) for b in range(n))
    ]
    return tuple(out)


def translation_embedding(r: Nearring) -> TranslationEmbedding:
    """Build the left-translation maps s -> (y -> s*y) and verify their laws.

    Verifies that every translation is an additive endomorphism, that the
    element-to-translation map is injective and compatible with
    multiplication, that applying translations to the identity recovers
    the elements, and that unit translations are automorphisms recovering
    exactly the units. Any failure raises InvariantViolation since these
    are guaranteed for valid nearrings with identity.
    """
    if r.identity is None:
        raise PreconditionError("translation embedding needs an identity element")
    g, mul, i = r.group, r.mul, r.identity
    n = r.order
    translations = []
    for s in range(n):
        images = mul[s]
        if not is_homomorphism(g, g, images):
            raise InvariantViolation(
                f"left translation by {s} is not an additive endomorphism")
        translations.append(GroupMap(g, g, images))
    if len({t.images for t in translations}) != n:
        raise InvariantViolation("element-to-translation map is not injective")
    hom = all(
        translations[s].compose(translations[t]).images == translations[mul[s][t]].images
        for s in range(n) for t in range(n))
    anti = all(
        translations[s].compose(translations[t]).images == translations[mul[t][s]].images
        for s in range(n) for t in range(n))
    if not (hom or anti):
        raise InvariantViolation("translations are not multiplication-compatible")
    if hom and anti:
        rule = "either order (commutative multiplication)"
    elif hom:
        rule = "compose(s,t) = translation(s*t)"
    else:
        rule = "compose(s,t) = translation(t*s)"
    if sorted(t.images[i] for t in translations) != list(range(n)):
        raise InvariantViolation("applying translations to the identity must recover R")
    us = units(r)
    unit_translations = tuple(translations[u] for u in us)
    for t in unit_translations:
        if not t.is_bijective():
            raise InvariantViolation("unit translation is not an automorphism")
    if tuple(sorted(t.images[i] for t in unit_translations)) != us:
        raise InvariantViolation("unit translations applied to the identity must recover the units")
    return TranslationEmbedding(r, tuple(translations), unit_translations, rule)


# -- ideals -------------------------------------------------------------------

def ideal_violation(r: Nearring, members) -> dict | None:
    """First violated ideal condition for the subset, or None if it is an ideal.

    Conditions, in scan order: contains 0 and is closed under addition,
    is normal in the additive group, absorbs left products r*a, and
    contains every difference (r+a)*s - r*s.
    """
    n, add, neg, mul = r.order, r.group.add, r.group.neg, r.mul
    s = set(members)
    if not s <= set(range(n)):
        raise InputError("ideal members out of range")
    if 0 not in s:
        return {"condition": "subgroup", "elements": (0,), "detail": "missing 0"}
    for a in sorted(s):
        for b in sorted(s):
            if add[a][b] not in s:
                return {"condition": "subgroup", "elements": (a, b), "value": add[a][b]}
    for h in range(n):
        for a in sorted(s):
            v = add[add[h][a]][neg[h]]
            if v not in s:
                return {"condition": "normality", "elements": (h, a), "value": v}
    for x in range(n):
        for a in sorted(s):
            if mul[x][a] not in s:
                return {"condition": "left-product", "elements": (x, a), "value": mul[x][a]}
    for x in range(n):
        for a in sorted(s):
            for y in range(n):
                v = add[mul[add[x][a]][y]][neg[mul[x][y]]]
                if v not in s:
                    return {"condition": "translate-difference", "elements": (x, a, y), "value": v}
    return None


def is_ideal(r: Nearring, members) -> bool:
    return ideal_violation(r, members) is None


def ideals(r: Nearring) -> list[tuple[int, ...]]:
    """All ideals, in deterministic (size, members) order.

    Only normal additive subgroups can be ideals, so the scan runs over
    those instead of the full power set.
    """
    out = []
    for sub in subgroups(r.group, normal_only=True):
        if is_ideal(r, sub.members):
            out.append(sub.members)
    return out


def is_simple(r: Nearring) -> bool:
    """Exactly two ideals; the one-element nearring is not counted simple."""
    return len(ideals(r)) == 2


# -- modules ------------------------------------------------------------------

def module_violation(m: RModule) -> dict | None:
    """First violated module axiom, or None for a valid module."""
    gn = m.carrier.order
    rn = m.ring.order
    act, mul, add_g, add_r = m.action, m.ring.mul, m.carrier.add, m.ring.group.add
    for g in range(gn):
        for x in range(rn):
            for y in range(rn):
                if act[act[g][x]][y] != act[g][mul[x][y]]:
                    return {"axiom": "action-multiplicativity", "elements": (g, x, y)}
                if act[g][add_r[x][y]] != add_g[act[g][x]][act[g][y]]:
                    return {"axiom": "action-additivity", "elements": (g, x, y)}
    return None


def regular_module(r: Nearring, checked: bool = True) -> RModule:
    """The additive group of r acting on itself by right multiplication."""
    m = RModule(carrier=r.group, ring=r, action=r.mul)
    if checked:
        bad = module_violation(m)
        if bad is not None:
            raise InvariantViolation(
                f"regular module axiom {bad['axiom']} fails at {bad['elements']}")
    return m


def build_module_unchecked(carrier: FiniteGroup, ring: Nearring, action) -> RModule:
    """Assemble a module value without verifying the module axioms."""
    table = tuple(tuple(int(v) for v in row) for row in action)
    return RModule(carrier, ring, table)


def annihilator(m: RModule) -> tuple[int, ...]:
    """All ring elements acting as zero on the whole carrier."""
    gn = m.carrier.order
    return tuple(x for x in range(m.ring.order)
                 if all(m.action[g][x] == 0 for g in range(gn)))


def is_faithful(m: RModule) -> bool:
    return annihilator(m) == (0,)


# -- builtin examples ----------------------------------------------------------

_RING_RE = re.compile(r"^ring:Z(\d+)$")

BUILTIN_NAMES = ("s3-paper", "map-z2", "zero:<groupspec>", "ring:Z<n>")


def builtin(name: str) -> Nearring:
    """Construct a builtin example nearring by name.

    Names: "s3-paper" (the classical zero-symmetric semidistributive
    multiplication on the nonabelian group of order 6), "map-z2" (all four
    functions on Z2 under pointwise addition and composition),
    "zero:<groupspec>" (all products zero), "ring:Z<n>" (modular ring).
    """
    if name == "s3-paper":
        return _builtin_s3()
    if name == "map-z2":
        return _builtin_map_z2()
    if name.startswith("zero:"):
        g = build_group(name[len("zero:"):])
        mul = tuple((0,) * g.order for _ in range(g.order))
        return validate(CandidateMultiplication(g, mul), name=name)
    m = _RING_RE.match(name)
    if m:
        n = int(m.group(1))
        g = build_group(f"Z{n}")
        mul = tuple(tuple((x * y) % n for y in range(n)) for x in range(n))
        return validate(CandidateMultiplication(g, mul), name=name)
    raise InputError(f"unknown builtin {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def _builtin_s3() -> Nearring:
    # Rows 0, a, 2a are zero; rows b, a+b, 2a+b are 0 on the <a> columns and
    # constant equal to the row element on the reflection columns.
    g = build_group("S3")
    mul = tuple(
        tuple(x if (x >= 3 and y >= 3) else 0 for y in range(6))
        for x in range(6)
    )
    return validate(CandidateMultiplication(g, mul), name="s3-paper")


def _builtin_map_z2() -> Nearring:
    """The nearring of all functions on Z2.

    Elements are the four functions f: Z2 -> Z2 indexed by 2*f(0) + f(1)
    (so 0 is the zero function and 1 is the identity function); addition is
    pointwise. Both composition orders are tried and the one satisfying the
    left distributive law is kept; the choice is recorded in `extra`.
    """
    funcs = [(0, 0), (0, 1), (1, 0), (1, 1)]
    index = {f: i for i, f in enumerate(funcs)}
    add = tuple(
        tuple(index[((f[0] + h[0]) % 2, (f[1] + h[1]) % 2)] for h in funcs)
        for f in funcs
    )
    g = build_group({"order": 4, "add": [list(row) for row in add]})

    def compose(outer, inner):  # outer applied after inner
        return (outer[inner[0]], outer[inner[1]])

    left_then_right = tuple(
        tuple(index[compose(funcs[j], funcs[i])] for j in range(4)) for i in range(4))
    right_then_left = tuple(
        tuple(index[compose(funcs[i], funcs[j])] for j in range(4)) for i in range(4))
    for mul, order_name in ((left_then_right, "left factor feeds the right factor"),
                            (right_then_left, "right factor feeds the left factor")):
        if is_left_distributive(g, mul):
            return validate(
                CandidateMultiplication(g, mul), name="map-z2",
                extra=(("composition-order", order_name),
                       ("elements", "0:zero 1:identity 2:x+1 3:constant-1")))
    raise InvariantViolation("no composition order is left distributive on Map(Z2)")
