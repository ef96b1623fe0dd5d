"""Conjugacy classes of cyclic actions and their derived data.

A class is a quotient signature plus a canonical epimorphism; two actions
are conjugate exactly when these coincide.  Powers of a class are taken
by restricting the deck action of the explicitly built cover and matching
the re-quotiented orbifold against the enumerated table, rather than by
hand surgery on signatures.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

from .signature import (OrbifoldSignature, PRESERVING, REVERSING, CHARACTERS,
                        check_character, enumerate_quotient_signatures,
                        format_signature)
from .epimorphism import (CyclicEpimorphism, canonical_state_orbit, canonicalize,
                          enumerate_epimorphisms, format_epimorphism)
from . import cover as cover_mod

MODES = ("strict", "paper")


def check_mode(mode):
    if mode not in MODES:
        raise ValueError("mode must be one of %r" % (MODES,))


@dataclass(frozen=True)
class FixedLocusProfile:
    """Fixed circles of a reversing involution and how they cut the surface."""
    circle_count: int
    complement_components: int


@dataclass(frozen=True)
class ActionClass:
    genus: int
    order: int
    character: str
    signature: OrbifoldSignature
    epi: CyclicEpimorphism            # canonical representative
    mode_provenance: str = "strict"
    name: str = None

    def sort_key(self):
        return (self.order, self.character, self.signature.sort_key(),
                self.epi.sort_key())

    def with_name(self, name):
        return replace(self, name=name)

    def __str__(self):
        label = self.name or "unnamed"
        return "%s: %s" % (label, format_epimorphism(self.epi))


class PowerClassUnmatched(LookupError):
    """The subgroup quotient does not correspond to any enumerated class.

    This happens exactly for relaxed-admissibility data whose cover is not
    an orientable surface; the extracted quotient is carried along for
    diagnostics.
    """

    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data


def classify(g: int, n: int, character, mode: str = "strict") -> list:
    """One class per canonical epimorphism over all admissible signatures."""
    check_character(character)
    check_mode(mode)
    if character == REVERSING and n % 2 != 0:
        return []
    seen = {}
    for sig in enumerate_quotient_signatures(g, n, character):
        for epi in enumerate_epimorphisms(sig, n, character, mode):
            canon = canonicalize(epi)
            key = (sig, canon.cone_images, canon.crosscap_images,
                   canon.boundary_images)
            if key not in seen:
                provenance = "strict" if canon.strict_parity else "paper"
                seen[key] = ActionClass(g, n, character, sig, canon, provenance)
    classes = sorted(seen.values(), key=ActionClass.sort_key)
    return classes


def scan_bound(g: int) -> int:
    """Safety margin above the largest order any action can have."""
    return 2 * (4 * g + 4)


def classify_all(g: int, mode: str = "strict", attach_names: bool = True) -> list:
    """Union over 2 <= n <= 4g+4 and both characters, plus an empty margin."""
    check_mode(mode)
    top = scan_bound(g)
    out = []
    for n in range(2, top + 1):
        for character in CHARACTERS:
            found = classify(g, n, character, mode)
            if n > 4 * g + 4 and found:
                raise AssertionError(
                    "action of order %d beyond the 4g+4 bound at genus %d" % (n, g))
            out.extend(found)
    out.sort(key=ActionClass.sort_key)
    if attach_names and g == 2:
        from .catalog import attach_catalog_names
        out = attach_catalog_names(out)
    return out


def fixed_point_count(c: ActionClass, d: int) -> int:
    """Isolated fixed points of h^d, from the cone-point stabilizers."""
    n = c.order
    if not 1 <= d < n:
        raise ValueError("power must satisfy 1 <= d < n")
    if c.character == REVERSING and d % 2 == 1:
        raise ValueError(
            "odd powers of a reversing action fix circles, not points; "
            "use fixed_locus_profile on the involution power")
    return cover_mod.formula_fixed_points(c.epi, d)


def fixed_locus_profile(c: ActionClass) -> FixedLocusProfile:
    """Circles of the reversing involution and size of their complement.

    Defined for reversing classes of order 2; take
    ``power_class(c, n // 2)`` first otherwise.  The complement is
    connected exactly when the images of the non-reflection generators of
    the mirror-complement region generate Z_2.
    """
    if c.character != REVERSING:
        raise ValueError("fixed circles only occur for reversing actions")
    if c.order != 2:
        raise ValueError("apply to the involution power (order-2 class) only")
    circles = c.signature.mirror_circles
    gens = list(c.epi.crosscap_images) + list(c.epi.boundary_images)
    # Handle images are normalized away; under strict parity they are even.
    components = 1 if any(x % 2 == 1 for x in gens) else 2
    return FixedLocusProfile(circles, components)


_power_cache = {}


def power_class(c: ActionClass, d: int) -> ActionClass:
    """The class of h^d, i.e. of the subgroup generated by h^gcd(d, n)."""
    n = c.order
    if d % n == 0:
        raise ValueError("h^d is the identity; no class to take")
    delta = gcd(d, n)
    if delta == 1:
        return c
    key = (c.signature, c.epi.cone_images, c.epi.crosscap_images,
           c.epi.boundary_images, c.order, c.character, c.mode_provenance, delta)
    if key in _power_cache:
        return _power_cache[key]

    n_prime = n // delta
    if c.character == REVERSING and delta % 2 == 1:
        character = REVERSING
    else:
        character = PRESERVING
    sub = cover_mod.restrict_cover(c.epi, delta)
    if sub.order != n_prime:
        raise AssertionError("subgroup order bookkeeping broken")

    if character == PRESERVING and not sub.orientable_underlying:
        raise PowerClassUnmatched(
            "subgroup quotient is non-orientable, so h^%d is not an action "
            "on an orientable surface (relaxed-admissibility datum)" % d, sub)

    candidates = [x for x in classify(c.genus, n_prime, character,
                                      c.mode_provenance)
                  if x.signature == sub.signature]
    aligned = tuple(img for _, img in sub.cone_data)
    bnd = tuple(sorted(sub.boundary_data))
    matches = []
    for cand in candidates:
        for cones, crosses, bnds in canonical_state_orbit(cand.epi):
            if cones == aligned and bnds == bnd:
                matches.append(cand)
                break
    if len(matches) > 1:
        matches = _disambiguate_by_fixed_data(c, delta, matches)
    if len(matches) != 1:
        raise PowerClassUnmatched(
            "quotient %s with cone data %s matched %d classes"
            % (format_signature(sub.signature), sub.cone_data, len(matches)), sub)
    result = matches[0]
    if c.genus == 2:
        from .catalog import attach_catalog_names
        result = attach_catalog_names([result])[0]
    _power_cache[key] = result
    return result


def _disambiguate_by_fixed_data(c: ActionClass, delta: int, matches):
    """Compare divisor-indexed fixed data of the power action and candidates."""
    n_prime = c.order // delta

    def divisor_vector(epi, n):
        vec = {}
        for e in range(1, n):
            if n % e == 0:
                vec[e] = cover_mod.formula_fixed_points(epi, e)
        return vec

    power_vec = {}
    for e in range(1, n_prime):
        if n_prime % e == 0:
            power_vec[e] = cover_mod.formula_fixed_points(c.epi, delta * e)
    return [m for m in matches if divisor_vector(m.epi, n_prime) == power_vec]


def max_order(g: int, character=None, mode: str = "strict"):
    """Largest order with a nonempty classification, plus its witnesses."""
    check_mode(mode)
    characters = CHARACTERS if character in (None, "any") else (character,)
    for ch in characters:
        check_character(ch)
    best, witnesses = 0, []
    for n in range(2, scan_bound(g) + 1):
        found = []
        for ch in characters:
            found.extend(classify(g, n, ch, mode))
        if found:
            if n > 4 * g + 4:
                raise AssertionError("order beyond the safety bound")
            best, witnesses = n, found
    return best, witnesses


def class_record(c: ActionClass) -> dict:
    """Frozen JSON record for one class."""
    record = {}
    if c.name is not None:
        record["name"] = c.name
    record.update({
        "genus": c.genus,
        "order": c.order,
        "character": c.character,
        "signature": format_signature(c.signature),
        "cone_images": list(c.epi.cone_images),
        "crosscap_images": list(c.epi.crosscap_images),
    })
    if c.epi.mirror_value is not None:
        record["mirror_value"] = c.epi.mirror_value
    record["mode_provenance"] = c.mode_provenance
    record["fixed_data"] = fixed_data(c)
    return record


def fixed_data(c: ActionClass) -> dict:
    """Point counts per preserving power, plus involution circle data."""
    n = c.order
    data = {"point_counts": {}}
    for d in range(1, n):
        if c.character == REVERSING and d % 2 == 1:
            continue
        data["point_counts"][str(d)] = fixed_point_count(c, d)
    if c.character == REVERSING and (n == 2 or (n // 2) % 2 == 1):
        cov = cover_mod.build_cover(c.epi)
        circles = cov.fixed_mirror_circles(n // 2)
        fixed_cells = [e for cyc in _folded_mirror_cells(cov) for e in cyc]
        data["involution"] = {
            "circles": circles,
            "complement_components": cov.complement_components(fixed_cells),
        }
    return data


def _folded_mirror_cells(cov):
    """Edge cycles fixed by the folding involution of a closed cover."""
    cycles = []
    for j, modulus in enumerate(cov.mirror_modulus):
        if cov.refl_volts[j] == 0:
            continue
        step = cov.bnd_volts[j] % modulus if modulus > 1 else 0
        seen = set()
        for start in range(modulus):
            if start in seen:
                continue
            cyc = []
            cval = start
            while cval not in seen:
                seen.add(cval)
                cyc.append(("m", j, cval))
                cval = (cval + step) % modulus
            cycles.append(cyc)
    return cycles


def verify_class(c: ActionClass) -> dict:
    """Oracle report for a class; see :func:`cycsurf.cover.verify_cover`."""
    return cover_mod.verify_cover(c.epi)
