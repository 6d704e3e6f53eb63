"""One verifier per structural claim about semidistributive nearrings.

Every check returns a CheckVerdict: whether its hypotheses are met
(applicable), whether the conclusion holds, and a concrete counterexample
witness when it does not. Hypothesis flags are read from the value's
cached flags; conclusions are always rescanned from the raw tables, so a
corrupted value cannot pass on the strength of its cache. Checks never
trust each other's verdicts: shared hypotheses (like abelian addition)
are re-tested where a check depends on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import (
    Nearring,
    RModule,
    annihilator,
    distributive_elements,
    ideal_violation,
    ideals,
    regular_module,
    units,
)
from .groups import exponent, is_homomorphism, p_component, prime_divisors, times


@dataclass(frozen=True)
class CheckVerdict:
    check_id: str
    applicable: bool
    holds: bool
    witness: dict | None = None
    notes: str = ""

    def as_dict(self) -> dict:
        out = {"check_id": self.check_id, "applicable": self.applicable, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = self.notes
        return out


@dataclass(frozen=True)
class SuiteReport:
    instance: str
    verdicts: tuple[CheckVerdict, ...]
    overall: bool

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "verdicts": [v.as_dict() for v in self.verdicts],
            "overall": "pass" if self.overall else "fail",
        }


def _vacuous(check_id: str, notes: str = "") -> CheckVerdict:
    return CheckVerdict(check_id, applicable=False, holds=True, witness=None, notes=notes)


def _failed(check_id: str, witness: dict, notes: str = "") -> CheckVerdict:
    return CheckVerdict(check_id, applicable=True, holds=False, witness=witness, notes=notes)


def _passed(check_id: str, notes: str = "") -> CheckVerdict:
    return CheckVerdict(check_id, applicable=True, holds=True, witness=None, notes=notes)


def _first_right_dist_failure(r: Nearring) -> dict | None:
    n, add, mul = r.order, r.group.add, r.mul
    for a in range(n):
        for b in range(n):
            for t in range(n):
                lhs = mul[add[a][b]][t]
                rhs = add[mul[a][t]][mul[b][t]]
                if lhs != rhs:
                    return {"law": "right-distributivity",
                            "elements": {"r": a, "s": b, "t": t}, "lhs": lhs, "rhs": rhs}
    return None


# -- nearring-level checks -----------------------------------------------------

def check_arithmetic(r: Nearring) -> CheckVerdict:
    """Negation, zero-product, repeated-sum, and coprime-order identities.

    Applicable to semidistributive instances. Verifies, for all elements
    and all repetition counts up to exponent+1:
      * (-r)s = -(rs), and 0*s is 0 or an element of additive order 2,
        and 0*r = 0 whenever r has odd additive order;
      * (r summed n times)*s = (rs summed n times) for odd n, plus 0*s
        for even n;
      * r*s = 0*s whenever the additive orders of r and s are coprime
        (so r*s = 0 in zero-symmetric instances and whenever s has odd
        order; the bare form r*s = 0 is not a theorem when 0*s has
        order 2).
    """
    cid = "arithmetic"
    if not r.flags.semidistributive:
        return _vacuous(cid, "requires a semidistributive instance")
    g = r.group
    n, add, neg, mul, orders = r.order, g.add, g.neg, r.mul, g.orders
    for a in range(n):
        for s in range(n):
            lhs, rhs = mul[neg[a]][s], neg[mul[a][s]]
            if lhs != rhs:
                return _failed(cid, {"law": "negation-product",
                                     "elements": {"r": a, "s": s}, "lhs": lhs, "rhs": rhs})
    for s in range(n):
        v = mul[0][s]
        if v != 0 and orders[v] != 2:
            return _failed(cid, {"law": "zero-product-order",
                                 "elements": {"s": s}, "lhs": v, "rhs": 0,
                                 "order": orders[v]})
    for a in range(n):
        if orders[a] % 2 == 1 and mul[0][a] != 0:
            return _failed(cid, {"law": "odd-order-zero-product",
                                 "elements": {"r": a}, "lhs": mul[0][a], "rhs": 0})
    top = exponent(g) + 1
    for a in range(n):
        for s in range(n):
            prod = mul[a][s]
            zs = mul[0][s]
            for k in range(1, top + 1):
                lhs = mul[times(g, a, k)][s]
                rhs = times(g, prod, k)
                if k % 2 == 0:
                    rhs = add[rhs][zs]
                if lhs != rhs:
                    return _failed(cid, {"law": "repeated-sum-product",
                                         "elements": {"r": a, "s": s, "n": k},
                                         "lhs": lhs, "rhs": rhs})
    for a in range(n):
        for s in range(n):
            if gcd(orders[a], orders[s]) == 1 and mul[a][s] != mul[0][s]:
                return _failed(cid, {"law": "coprime-order-product",
                                     "elements": {"r": a, "s": s},
                                     "lhs": mul[a][s], "rhs": mul[0][s]})
    return _passed(cid)


def check_abelian_addition(r: Nearring) -> CheckVerdict:
    """A semidistributive instance with identity must have abelian addition."""
    cid = "abelian-addition"
    if not (r.flags.semidistributive and r.flags.has_identity):
        return _vacuous(cid, "requires semidistributive with identity")
    add = r.group.add
    for x in range(r.order):
        for y in range(r.order):
            if add[x][y] != add[y][x]:
                return _failed(cid, {"law": "abelian-addition",
                                     "elements": {"x": x, "y": y},
                                     "lhs": add[x][y], "rhs": add[y][x]})
    return _passed(cid)


def check_identity_exponent(r: Nearring) -> CheckVerdict:
    """With an identity, the additive exponent equals the additive order of
    the identity and of every unit."""
    cid = "identity-exponent"
    if r.identity is None:
        return _vacuous(cid, "requires an identity element")
    exp = exponent(r.group)
    i = r.identity
    if r.group.orders[i] != exp:
        return _failed(cid, {"law": "identity-exponent",
                             "elements": {"u": i}, "lhs": r.group.orders[i], "rhs": exp,
                             "role": "identity"})
    for u in units(r):
        if r.group.orders[u] != exp:
            return _failed(cid, {"law": "identity-exponent",
                                 "elements": {"u": u}, "lhs": r.group.orders[u], "rhs": exp,
                                 "role": "unit"})
    return _passed(cid)


def check_odd_distributive(r: Nearring) -> CheckVerdict:
    """In a semidistributive instance with identity, every element of odd
    additive order is distributive; an odd-order instance is a ring."""
    cid = "odd-order-distributive"
    if not (r.flags.semidistributive and r.flags.has_identity):
        return _vacuous(cid, "requires semidistributive with identity")
    n, add, mul = r.order, r.group.add, r.mul
    dist = set(distributive_elements(r))
    for t in range(n):
        if r.group.orders[t] % 2 == 1 and t not in dist:
            for a in range(n):
                for b in range(n):
                    lhs = mul[add[a][b]][t]
                    rhs = add[mul[a][t]][mul[b][t]]
                    if lhs != rhs:
                        return _failed(cid, {"law": "odd-element-distributive",
                                             "elements": {"t": t, "r": a, "s": b},
                                             "lhs": lhs, "rhs": rhs})
    if n % 2 == 1 and len(dist) != n:
        bad = _first_right_dist_failure(r)
        assert bad is not None
        return _failed(cid, dict(bad, law="odd-order-ring"),
                       "odd-order semidistributive instances must be rings")
    return _passed(cid)


def check_primary_ideals(r: Nearring) -> CheckVerdict:
    """In a semidistributive instance with identity, every primary component
    of the additive group is an ideal.

    Abelianness is re-tested here (not taken from the abelian-addition
    check) since primary components only exist in abelian groups.
    """
    cid = "primary-ideals"
    if not (r.flags.semidistributive and r.flags.has_identity):
        return _vacuous(cid, "requires semidistributive with identity")
    g = r.group
    if not g.abelian:
        add = g.add
        x, y = next((x, y) for x in range(r.order) for y in range(r.order)
                    if add[x][y] != add[y][x])
        return _failed(cid, {"law": "abelian-addition",
                             "elements": {"x": x, "y": y},
                             "lhs": add[x][y], "rhs": add[y][x]},
                       "addition is not abelian, so primary components are undefined")
    for p in prime_divisors(r.order):
        members = p_component(g, p).members
        bad = ideal_violation(r, members)
        if bad is not None:
            witness = {"law": "primary-component-ideal", "p": p, "component": list(members)}
            witness.update(bad)
            return _failed(cid, witness)
    return _passed(cid)


def check_simple_is_ring(r: Nearring) -> CheckVerdict:
    """A semidistributive instance with identity and exactly two ideals must
    be distributive (i.e. a simple associative ring).

    On the one-element instance there is a single ideal, so the check is
    not applicable there.
    """
    cid = "simple-ring"
    if not (r.flags.semidistributive and r.flags.has_identity):
        return _vacuous(cid, "requires semidistributive with identity")
    if len(ideals(r)) != 2:
        return _vacuous(cid, "requires exactly two ideals")
    bad = _first_right_dist_failure(r)
    if bad is not None:
        return _failed(cid, bad)
    return _passed(cid)


def check_no_order_two(r: Nearring) -> CheckVerdict:
    """A semidistributive instance with identity and no elements of additive
    order 2 must be distributive."""
    cid = "no-order-two"
    if not (r.flags.semidistributive and r.flags.has_identity):
        return _vacuous(cid, "requires semidistributive with identity")
    if any(o == 2 for o in r.group.orders):
        return _vacuous(cid, "additive group has an element of order 2")
    bad = _first_right_dist_failure(r)
    if bad is not None:
        return _failed(cid, bad)
    return _passed(cid)


# -- module-level checks --------------------------------------------------------

def check_annihilator_ideal(m: RModule) -> CheckVerdict:
    """The annihilator of a module is an ideal of the acting nearring."""
    cid = "annihilator-ideal"
    ann = annihilator(m)
    bad = ideal_violation(m.ring, ann)
    if bad is not None:
        witness = {"law": "annihilator-ideal", "annihilator": list(ann)}
        witness.update(bad)
        return _failed(cid, witness)
    return _passed(cid)


def check_faithful_module_ring(m: RModule) -> CheckVerdict:
    """A faithful module with abelian carrier whose elements all act as
    additive endomorphisms forces the acting nearring to be fully
    distributive (an associative ring).

    All three hypotheses are recomputed from the module tables.
    """
    cid = "faithful-module"
    if annihilator(m) != (0,):
        return _vacuous(cid, "module is not faithful")
    if not m.carrier.abelian:
        return _vacuous(cid, "carrier is not abelian")
    gn = m.carrier.order
    for x in range(m.ring.order):
        column = tuple(m.action[g][x] for g in range(gn))
        if not is_homomorphism(m.carrier, m.carrier, column):
            return _vacuous(cid, f"element {x} does not act as an endomorphism")
    r = m.ring
    n, add, mul = r.order, r.group.add, r.mul
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs, rhs = mul[x][add[y][z]], add[mul[x][y]][mul[x][z]]
                if lhs != rhs:
                    return _failed(cid, {"law": "left-distributivity",
                                         "elements": {"x": x, "y": y, "z": z},
                                         "lhs": lhs, "rhs": rhs})
    bad = _first_right_dist_failure(r)
    if bad is not None:
        return _failed(cid, bad)
    return _passed(cid)


# -- suite runner ----------------------------------------------------------------

NEARRING_CHECKS = (
    ("arithmetic", check_arithmetic),
    ("abelian-addition", check_abelian_addition),
    ("identity-exponent", check_identity_exponent),
    ("odd-order-distributive", check_odd_distributive),
    ("primary-ideals", check_primary_ideals),
)

MODULE_CHECKS = (
    ("annihilator-ideal", check_annihilator_ideal),
    ("faithful-module", check_faithful_module_ring),
)

TAIL_CHECKS = (
    ("simple-ring", check_simple_is_ring),
    ("no-order-two", check_no_order_two),
)

CHECK_IDS = tuple(cid for cid, _ in NEARRING_CHECKS + MODULE_CHECKS + TAIL_CHECKS)


def run_suite(r: Nearring, instance_id: str | None = None) -> SuiteReport:
    """Run every check on a nearring; module checks use its regular module.

    The regular module is assembled without re-asserting the module
    axioms so that diagnostic runs on axiom-violating tables still reach
    the module-level checks.
    """
    if instance_id is None:
        instance_id = r.label()
    verdicts = [fn(r) for _, fn in NEARRING_CHECKS]
    m = regular_module(r, checked=False)
    verdicts.extend(fn(m) for _, fn in MODULE_CHECKS)
    verdicts.extend(fn(r) for _, fn in TAIL_CHECKS)
    overall = all(v.holds for v in verdicts if v.applicable)
    return SuiteReport(instance_id, tuple(verdicts), overall)


def summarize_reports(reports) -> dict:
    """Aggregate suite reports: applicable counts per check and failures."""
    applicable = {cid: 0 for cid in CHECK_IDS}
    failures = []
    total = 0
    for rep in reports:
        total += 1
        for v in rep.verdicts:
            if v.applicable:
                applicable[v.check_id] += 1
                if not v.holds:
                    failures.append({"instance": rep.instance, "check_id": v.check_id})
    return {
        "instances": total,
        "applicable": applicable,
        "failures": failures,
        "overall": "pass" if not failures else "fail",
    }
