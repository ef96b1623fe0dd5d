"""Extendability of surface symmetries over the 3-sphere.

A class of order n with surface character eps_Sigma can extend over an
embedding of the surface in S^3 with the ambient map preserving (+) or
reversing (-) the orientation of S^3; the four combinations are the
extension types (eps_Sigma, eps_S).  The decision engine combines three
independent sources:

* necessary-condition rules (fixed-point counts of involutions, parity of
  the branch set, odd-order constraints), iterated through power classes;
* an explicit family of isometries of S^3 in C^2 that preserve a pair of
  dual theta-like spines and restrict to the equidistant genus-g surface,
  with exact root-of-unity arithmetic;
* golden catalog facts for the handful of verdicts whose proofs live
  outside the engine.

Removing the catalog degrades verdicts to "open", never flips them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .signature import PRESERVING, REVERSING
from .classify import (ActionClass, PowerClassUnmatched, fixed_locus_profile,
                       fixed_point_count, power_class)

TYPES = ("pp", "pm", "mp", "mm")
TYPE_SIGNS = {"pp": (1, 1), "pm": (1, -1), "mp": (-1, 1), "mm": (-1, -1)}
SIGN_TYPES = {v: k for k, v in TYPE_SIGNS.items()}

OPEN = ("open", None)


def char_sign(character) -> int:
    return 1 if character == PRESERVING else -1


def types_for(character):
    return ("pp", "pm") if character == PRESERVING else ("mp", "mm")


def power_type(tname: str, d: int) -> str:
    es, ea = TYPE_SIGNS[tname]
    return SIGN_TYPES[(es ** d, ea ** d)]


class VerdictConflict(RuntimeError):
    """A type both ruled out and realized: transcription or engine bug."""


# --- the S^3 isometry family ------------------------------------------------

@dataclass(frozen=True)
class BidiagonalIsometry:
    """(z1, z2) -> (u z1 or u conj(z1), v z2 or v conj(z2)) on S^3 in C^2.

    Phases are exact roots of unity stored as fractions of a full turn.
    """

    u: Fraction
    conj1: bool
    v: Fraction
    conj2: bool

    def __post_init__(self):
        object.__setattr__(self, "u", self.u % 1)
        object.__setattr__(self, "v", self.v % 1)

    def compose(self, other):
        """self after other, coordinatewise."""
        if self.conj1:
            u = (self.u - other.u) % 1
        else:
            u = (self.u + other.u) % 1
        if self.conj2:
            v = (self.v - other.v) % 1
        else:
            v = (self.v + other.v) % 1
        return BidiagonalIsometry(u, self.conj1 ^ other.conj1,
                                  v, self.conj2 ^ other.conj2)

    def __mul__(self, other):
        return self.compose(other)

    def power(self, k: int):
        out = identity_isometry()
        base = self
        if k < 0:
            raise ValueError("nonnegative powers only")
        for _ in range(k):
            out = base * out
        return out

    def is_identity(self) -> bool:
        return self.u == 0 and self.v == 0 and not self.conj1 and not self.conj2

    def coordinate_orders(self):
        o1 = 2 if self.conj1 else (1 if self.u == 0 else self.u.denominator)
        o2 = 2 if self.conj2 else (1 if self.v == 0 else self.v.denominator)
        return o1, o2


# interface alias: a bidiagonal map with per-coordinate conjugation signs
SignedBidiagonalMap = BidiagonalIsometry


def identity_isometry():
    return BidiagonalIsometry(Fraction(0), False, Fraction(0), False)


def quarter_turn_pair(g: int):
    """The order-4(g+1)-family generator for genus g (g even)."""
    return BidiagonalIsometry(Fraction(1, 4), False, Fraction(1, 2 * (g + 1)), False)


def half_turn_first():
    return BidiagonalIsometry(Fraction(1, 2), False, Fraction(0), False)


def mirror_first():
    return BidiagonalIsometry(Fraction(0), True, Fraction(0), False)


def map_order(m: BidiagonalIsometry) -> int:
    o1, o2 = m.coordinate_orders()
    return o1 * o2 // gcd(o1, o2)


def graph_preserving(m: BidiagonalIsometry, g: int) -> bool:
    """Does m permute the two dual spine vertex sets consistently?

    Vertices sit at the 4th roots of unity in the first coordinate and
    the (2g+2)-nd roots in the second; edges join vertices of equal index
    parity, so a parity swap must happen in both coordinates or neither.
    """
    k = m.u * 4
    l = m.v * (2 * g + 2)
    if k.denominator != 1 or l.denominator != 1:
        return False
    return int(k) % 2 == int(l) % 2


def map_type(m: BidiagonalIsometry, g: int):
    """(eps_Sigma, eps_S) of the restriction to the equidistant surface.

    eps_S flips with each conjugated coordinate; the surface orientation
    additionally flips when the map exchanges the two spines, which
    happens exactly when the vertex parity is swapped.
    """
    if m.is_identity():
        raise ValueError("identity has no type")
    if not graph_preserving(m, g):
        raise ValueError("map does not preserve the spine pair for genus %d" % g)
    eps_s = -1 if (m.conj1 ^ m.conj2) else 1
    side_swap = int(m.u * 4) % 2 == 1
    eps_sigma = eps_s * (-1 if side_swap else 1)
    return (eps_sigma, eps_s)


def construction_words(g: int):
    """All members of the spine-preserving family, labelled deterministically.

    Generated by the quarter-turn pair tau, the half turn rho of the
    first coordinate, and the mirror sigma; words are reduced to
    ``[sigma] [rho] tau^k``.
    """
    tau = quarter_turn_pair(g)
    rho = half_turn_first()
    sigma = mirror_first()
    out = {}
    order = map_order(tau)
    for use_sigma in (False, True):
        for use_rho in (False, True):
            for k in range(order):
                m = identity_isometry()
                for _ in range(k):
                    m = tau * m
                if use_rho:
                    m = rho * m
                if use_sigma:
                    m = sigma * m
                if m.is_identity():
                    continue
                label = []
                if use_sigma:
                    label.append("sigma")
                if use_rho:
                    label.append("rho")
                if k == 1:
                    label.append("tau")
                elif k > 1:
                    label.append("tau^%d" % k)
                name = "*".join(label) if label else "id"
                if m not in out:
                    out[m] = name
    return sorted(out.items(), key=lambda kv: kv[1])


def parse_word(word: str, g: int) -> BidiagonalIsometry:
    m = identity_isometry()
    for factor in word.split("*"):
        factor = factor.strip()
        name, _, exp = factor.partition("^")
        k = int(exp) if exp else 1
        base = {"tau": quarter_turn_pair(g), "rho": half_turn_first(),
                "sigma": mirror_first()}[name]
        m = m * base.power(k)
    return m


# --- obstruction rules ------------------------------------------------------

def _rule_out(statuses, tname, rule):
    if statuses[tname][0] == "open":
        statuses[tname] = ("ruled_out", rule)


def base_obstructions(c: ActionClass) -> dict:
    """Per-type statuses from the direct rules, before power propagation."""
    statuses = {t: OPEN for t in TYPES}
    for t in TYPES:
        if TYPE_SIGNS[t][0] != char_sign(c.character):
            statuses[t] = ("ruled_out", "R-char")
    n = c.order
    if n % 2 == 1:
        _rule_out(statuses, "pm", "R-oddorder")
        _rule_out(statuses, "mm", "R-oddorder")
    if c.character == PRESERVING:
        cones = c.signature.cone_indices
        if len(cones) % 2 == 1:
            _rule_out(statuses, "pp", "R-odd")
        if cones and max(cones) == n and min(cones) < n:
            _rule_out(statuses, "pp", "R-top")
    if n == 2:
        if c.character == PRESERVING:
            if fixed_point_count(c, 1) > 2:
                _rule_out(statuses, "pm", "R-inv-fix-pres")
        else:
            profile = fixed_locus_profile(c)
            if profile.circle_count > 1:
                _rule_out(statuses, "mp", "R-inv-fix-rev-p")
            if profile.circle_count >= 1 and profile.complement_components == 1:
                _rule_out(statuses, "mm", "R-inv-fix-rev-r")
    return statuses


def apply_obstructions(classes) -> dict:
    """Most restrictive fixed point of the rule set over a class table.

    A type survives for a class only if all its powers survive for the
    corresponding power classes; power classes outside the input table
    are pulled in, and the propagation iterates to stability.
    """
    worklist = list(classes)
    table = {id(c): base_obstructions(c) for c in worklist}
    index = {(c.order, c.character, c.signature, c.epi.cone_images,
              c.epi.crosscap_images, c.epi.boundary_images): c for c in worklist}

    changed = True
    while changed:
        changed = False
        for c in list(worklist):
            statuses = table[id(c)]
            for d in range(2, c.order):
                if c.order % d != 0:
                    continue
                try:
                    target = power_class(c, d)
                except PowerClassUnmatched:
                    continue
                key = (target.order, target.character, target.signature,
                       target.epi.cone_images, target.epi.crosscap_images,
                       target.epi.boundary_images)
                target = index.get(key, target)
                if id(target) not in table:
                    table[id(target)] = base_obstructions(target)
                    index[key] = target
                    worklist.append(target)
                    changed = True
                tstat = table[id(target)]
                for tname in types_for(c.character):
                    if statuses[tname][0] != "open":
                        continue
                    pt = power_type(tname, d)
                    if tstat[pt][0] == "ruled_out":
                        rule = "R-power(d=%d -> %s, %s)" % (
                            d, target.name or str(target.signature),
                            tstat[pt][1])
                        statuses[tname] = ("ruled_out", rule)
                        changed = True
    return {id(c): table[id(c)] for c in classes}


# --- realization ------------------------------------------------------------

def realize_from_constructions(c: ActionClass, realization_table=None) -> dict:
    """Realized types evidenced by the isometry family.

    Evidence requires a quotient-matching entry binding a word of the
    family to the class (golden data, genus 2); order and surface
    character of the word are then verified exactly.
    """
    out = {}
    if realization_table is None:
        from .catalog import realization_words
        realization_table = realization_words()
    if c.name is None or c.genus != 2:
        return out
    word = realization_table.get(c.name)
    if word is None:
        return out
    m = parse_word(word, c.genus)
    if map_order(m) != c.order:
        raise VerdictConflict("realization word %s has wrong order for %s"
                              % (word, c.name))
    eps_sigma, eps_s = map_type(m, c.genus)
    if eps_sigma != char_sign(c.character):
        raise VerdictConflict("realization word %s has wrong character for %s"
                              % (word, c.name))
    tname = SIGN_TYPES[(eps_sigma, eps_s)]
    out[tname] = "restriction of %s" % word
    return out


def max_order_realization(g: int, mode: str = "strict"):
    """For even g: the unique order-4(g+1) class and the word realizing it."""
    if g % 2 != 0:
        raise ValueError("the 4g+4 family exists for even genus only")
    from .classify import classify
    tau = quarter_turn_pair(g)
    n = 4 * (g + 1)
    if map_order(tau) != n:
        raise AssertionError("family generator has unexpected order")
    eps_sigma, eps_s = map_type(tau, g)
    character = PRESERVING if eps_sigma == 1 else REVERSING
    found = classify(g, n, character, mode)
    if len(found) != 1:
        raise LookupError("expected a unique order-%d class at genus %d, got %d"
                          % (n, g, len(found)))
    return found[0], "tau", (eps_sigma, eps_s)


# --- verdicts ---------------------------------------------------------------

@dataclass
class ExtendabilityVerdict:
    class_name: str
    types: dict              # tname -> (status, detail)
    summary: str             # "+", "-", "+-", "empty", or "unknown"
    evidence: list

    def to_record(self):
        return {
            "types": {t: {"status": self.types[t][0],
                          **({"rule": self.types[t][1]}
                             if self.types[t][0] == "ruled_out" else {}),
                          **({"evidence": self.types[t][1]}
                             if self.types[t][0] == "realized" else {})}
                      for t in TYPES},
            "summary": self.summary,
            "evidence": list(self.evidence),
        }


def summary_of(statuses) -> str:
    realized = {TYPE_SIGNS[t][1] for t, (st, _) in statuses.items()
                if st == "realized"}
    undecided = [t for t, (st, _) in statuses.items() if st == "open"]
    if undecided:
        return "unknown"
    if not realized:
        return "empty"
    if realized == {1, -1}:
        return "+-"
    return "+" if realized == {1} else "-"


def bracket_text(summary: str) -> str:
    return {"+": "{+}", "-": "{-}", "+-": "{+,-}", "empty": "{}",
            "unknown": "{?}"}[summary]


def decide(c: ActionClass, rule_table=None, rules_only=False,
           catalog_facts=None) -> ExtendabilityVerdict:
    """Merge rules, construction realizations, and catalog facts."""
    if rule_table is None:
        rule_table = apply_obstructions([c])
    statuses = dict(rule_table[id(c)])
    evidence = []
    for tname, (st, detail) in statuses.items():
        if st == "ruled_out" and detail != "R-char":
            evidence.append("%s ruled out by %s" % (tname, detail))

    if not rules_only:
        for tname, why in realize_from_constructions(c).items():
            if statuses[tname][0] == "ruled_out":
                raise VerdictConflict(
                    "%s: type %s realized by construction but ruled out by %s"
                    % (c.name, tname, statuses[tname][1]))
            statuses[tname] = ("realized", why)
            evidence.append("%s realized: %s" % (tname, why))
        if catalog_facts is None:
            from .catalog import facts_for
            catalog_facts = facts_for(c.name) if c.name else []
        for tname, status, fact in catalog_facts:
            current = statuses[tname][0]
            if status == "realized":
                if current == "ruled_out":
                    raise VerdictConflict(
                        "%s: type %s realized per catalog (%s) but ruled out by %s"
                        % (c.name, tname, fact, statuses[tname][1]))
                if current == "open":
                    statuses[tname] = ("realized", fact)
                    evidence.append("%s realized: %s" % (tname, fact))
            elif status == "ruled_out":
                if current == "realized":
                    raise VerdictConflict(
                        "%s: type %s ruled out per catalog (%s) but realized (%s)"
                        % (c.name, tname, fact, statuses[tname][1]))
                if current == "open":
                    statuses[tname] = ("ruled_out", fact)
                    evidence.append("%s ruled out: %s" % (tname, fact))

    return ExtendabilityVerdict(c.name or str(c.signature), statuses,
                                summary_of(statuses), evidence)


def decide_all(classes, rules_only=False) -> dict:
    """Verdicts for a whole table, sharing one rule propagation."""
    rule_table = apply_obstructions(classes)
    return {id(c): decide(c, rule_table, rules_only=rules_only) for c in classes}
