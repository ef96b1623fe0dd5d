"""Surjections from quotient-orbifold groups onto Z_n, up to equivalence.

Generators follow the normal form for the fundamental group of a closed
quotient orbifold without corner reflectors: cone generators x_i (order
q_i), handle pairs a_l, b_l on an orientable underlying surface, crosscap
generators d_l otherwise, one boundary-parallel generator e_j and one
reflection r_j per mirror circle, subject to

    x_1 ... x_k e_1 ... e_b (prod [a_l, b_l]  |  prod d_l^2) = 1 .

A homomorphism onto Z_n is recorded by the images of the cones, crosscaps
and boundary generators; handle images are never part of the class datum
(they are unconstrained by the relation and only matter for surjectivity)
and every reflection maps to the unique order-2 element n/2.

Admissible images must give each cone generator exact order q_i, satisfy
the long relation, and generate Z_n.  In strict mode the residue parity
of every generator image must also equal its orientation character
(cones, handles and boundary loops are two-sided, crosscaps and
reflections are one-sided), which is exactly the condition for the
associated cover to be an orientable surface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .signature import (OrbifoldSignature, PRESERVING, REVERSING,
                        check_character, format_signature, parse_signature)


def order_mod(x: int, n: int) -> int:
    return n // gcd(x % n, n)


def elements_of_order(q: int, n: int):
    """Residues of exact multiplicative order q in Z_n."""
    if n % q != 0:
        return []
    return [x for x in range(n) if order_mod(x, n) == q]


class AdmissibilityError(ValueError):
    """Signature and requested data cannot coexist."""


@dataclass(frozen=True)
class CyclicEpimorphism:
    """Images of the orbifold-group generators in Z_n.

    ``cone_images`` is aligned with the sorted cone indices of the
    signature; ``boundary_images`` holds one even residue per mirror
    circle (they absorb the long-relation balance and carry geometric
    content when several mirrors are present, so they are kept).
    ``strict_parity`` records whether the orientation-character
    constraint was enforced when this datum was produced.
    """

    signature: OrbifoldSignature
    n: int
    character: str
    cone_images: tuple = ()
    crosscap_images: tuple = ()
    boundary_images: tuple = ()
    strict_parity: bool = True

    def __post_init__(self):
        object.__setattr__(self, "cone_images",
                           tuple(x % self.n for x in self.cone_images))
        object.__setattr__(self, "crosscap_images",
                           tuple(x % self.n for x in self.crosscap_images))
        object.__setattr__(self, "boundary_images",
                           tuple(x % self.n for x in self.boundary_images))
        if len(self.cone_images) != self.signature.cone_count:
            raise ValueError("need one image per cone index")
        expected_cross = 0 if self.signature.orientable else self.signature.genus_or_crosscaps
        if len(self.crosscap_images) != expected_cross:
            raise ValueError("need one image per crosscap")
        if len(self.boundary_images) != self.signature.mirror_circles:
            raise ValueError("need one boundary image per mirror circle")

    @property
    def handle_rank(self) -> int:
        return 2 * self.signature.genus_or_crosscaps if self.signature.orientable else 0

    @property
    def mirror_value(self):
        """Forced image n/2 of every reflection, or None without mirrors."""
        return self.n // 2 if self.signature.mirror_circles else None

    def sort_key(self):
        return (self.n, self.character, self.signature.sort_key(),
                self.cone_images, self.crosscap_images, self.boundary_images)

    def __str__(self):
        return format_epimorphism(self)


def relation_sum(epi: CyclicEpimorphism) -> int:
    s = sum(epi.cone_images) + 2 * sum(epi.crosscap_images) + sum(epi.boundary_images)
    return s % epi.n


def generated_subgroup_gcd(epi: CyclicEpimorphism) -> int:
    """gcd generating the subgroup reachable by all generator images.

    Handle generators contribute their whole allowed image pool: every
    residue in the preserving (even) subgroup under strict parity for a
    reversing action, any residue otherwise.
    """
    g = epi.n
    for x in epi.cone_images + epi.crosscap_images + epi.boundary_images:
        g = gcd(g, x)
    if epi.mirror_value is not None:
        g = gcd(g, epi.mirror_value)
    if epi.handle_rank:
        pool = 2 if (epi.strict_parity and epi.character == REVERSING) else 1
        g = gcd(g, pool)
    return g


def is_surjective(epi: CyclicEpimorphism) -> bool:
    return generated_subgroup_gcd(epi) == 1


def check_admissible(epi: CyclicEpimorphism, strict: bool) -> bool:
    """Exact orders, long relation, surjectivity, and parity when strict."""
    sig, n = epi.signature, epi.n
    for q, x in zip(sig.cone_indices, epi.cone_images):
        if order_mod(x, n) != q:
            return False
    if relation_sum(epi) != 0:
        return False
    if any(x % 2 != 0 for x in epi.boundary_images):
        return False
    if sig.mirror_circles and n % 2 != 0:
        return False
    if epi.character == REVERSING:
        has_odd_carrier = any(x % 2 == 1 for x in epi.crosscap_images)
        if epi.mirror_value is not None and epi.mirror_value % 2 == 1:
            has_odd_carrier = True
        if not has_odd_carrier:
            return False
    if strict and epi.character == REVERSING:
        if any(x % 2 != 0 for x in epi.cone_images):
            return False
        if any(x % 2 != 1 for x in epi.crosscap_images):
            return False
        if epi.mirror_value is not None and epi.mirror_value % 2 == 0:
            return False
    if not is_surjective(epi):
        return False
    return True


def _nondecreasing_tuples(pool, length, start=0):
    if length == 0:
        yield ()
        return
    for pos in range(start, len(pool)):
        for rest in _nondecreasing_tuples(pool, length - 1, pos):
            yield (pool[pos],) + rest


def _raw_assignments(sig: OrbifoldSignature, n, character, strict, relaxed=False):
    """Generate candidate epimorphisms; duplicates only up to block order.

    Cone images are enumerated nondecreasing inside every block of equal
    cone indices, crosscap and boundary images nondecreasing overall.
    """
    cone_pools = []
    for q in sig.cone_indices:
        pool = elements_of_order(q, n)
        if strict and character == REVERSING:
            pool = [x for x in pool if x % 2 == 0]
        cone_pools.append(pool)

    # Blocks of equal cone index for duplicate-free enumeration.
    blocks = []
    i = 0
    while i < len(sig.cone_indices):
        j = i
        while j < len(sig.cone_indices) and sig.cone_indices[j] == sig.cone_indices[i]:
            j += 1
        blocks.append((i, j))
        i = j

    def cone_tuples(block_pos=0):
        if block_pos == len(blocks):
            yield ()
            return
        i, j = blocks[block_pos]
        for head in _nondecreasing_tuples(cone_pools[i], j - i):
            for rest in cone_tuples(block_pos + 1):
                yield head + rest

    cross_count = 0 if sig.orientable else sig.genus_or_crosscaps
    if strict and character == REVERSING:
        cross_pool = [x for x in range(n) if x % 2 == 1]
    else:
        cross_pool = list(range(n))

    even_pool = [x for x in range(n) if x % 2 == 0]
    b = sig.mirror_circles

    for cones in cone_tuples():
        for crosses in _nondecreasing_tuples(cross_pool, cross_count):
            need = -(sum(cones) + 2 * sum(crosses)) % n
            if b == 0:
                if need != 0:
                    continue
                bnd_options = [()]
            else:
                bnd_options = [t for t in _nondecreasing_tuples(even_pool, b)
                               if sum(t) % n == need]
            for bnd in bnd_options:
                yield CyclicEpimorphism(sig, n, character, cones, crosses, bnd,
                                        strict_parity=strict and not relaxed)


def enumerate_epimorphisms(sig: OrbifoldSignature, n: int, character,
                           mode: str = "strict") -> list:
    """All admissible epimorphisms for the signature, per the chosen mode.

    ``strict`` enforces the orientation-character parity test, so the
    associated cover is an orientable surface.  ``paper`` follows the
    explicit representation-list criteria (exact order, relation,
    surjectivity): those coincide with strict admissibility whenever a
    parity-consistent assignment exists, and otherwise -- only possible
    for a reversing cone-bearing quotient -- the parity requirement on
    crosscap images is dropped.  Enumerating K(2) -> Z_4 in paper mode is
    the one genus-2 case where the relaxation fires.
    """
    check_character(character)
    if mode not in ("strict", "paper"):
        raise ValueError("mode must be 'strict' or 'paper'")
    if character == PRESERVING and (not sig.orientable or sig.mirror_circles):
        raise AdmissibilityError(
            "preserving action cannot have a non-orientable or mirrored quotient")
    if character == REVERSING and sig.orientable and sig.mirror_circles == 0:
        raise AdmissibilityError(
            "reversing action needs a crosscap or a mirror circle in the quotient")
    if character == REVERSING and n % 2 != 0:
        raise AdmissibilityError("reversing actions have even order")

    out = [epi for epi in _raw_assignments(sig, n, character, strict=True)
           if check_admissible(epi, strict=True)]
    if not out and mode == "paper" and character == REVERSING and sig.cone_indices:
        out = [epi for epi in _raw_assignments(sig, n, character,
                                               strict=False, relaxed=True)
               if check_admissible(epi, strict=False)]
    out.sort(key=CyclicEpimorphism.sort_key)
    return out


# --- canonical forms -------------------------------------------------------

def _blocks(sig: OrbifoldSignature):
    blocks = []
    i = 0
    while i < len(sig.cone_indices):
        j = i
        while j < len(sig.cone_indices) and sig.cone_indices[j] == sig.cone_indices[i]:
            j += 1
        blocks.append((i, j))
        i = j
    return blocks


def _normalize_state(sig, state):
    cones, crosses, bnd = state
    cones = list(cones)
    for i, j in _blocks(sig):
        cones[i:j] = sorted(cones[i:j])
    return (tuple(cones), tuple(sorted(crosses)), tuple(sorted(bnd)))


def canonical_state_orbit(epi: CyclicEpimorphism):
    """Closure of the image data under the equivalence moves.

    Moves: permute cone images of equal index; permute crosscap and
    boundary images; post-compose with any automorphism of Z_n (multiply
    every image by a unit); push a cone point through a crosscap, which
    inverts that cone image and adds the old value to the crosscap image
    (the long-relation sum is preserved exactly because crosscap images
    enter it doubled).  Handle images never appear: they are normalized
    away and only feed the surjectivity check.
    """
    n = epi.n
    sig = epi.signature
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    start = _normalize_state(sig, (epi.cone_images, epi.crosscap_images,
                                   epi.boundary_images))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for cones, crosses, bnd in frontier:
            candidates = []
            for u in units:
                candidates.append((tuple(x * u % n for x in cones),
                                   tuple(x * u % n for x in crosses),
                                   tuple(x * u % n for x in bnd)))
            for i in range(len(cones)):
                for j in range(len(crosses)):
                    new_c = list(cones)
                    new_d = list(crosses)
                    new_d[j] = (new_d[j] + cones[i]) % n
                    new_c[i] = (-cones[i]) % n
                    candidates.append((tuple(new_c), tuple(new_d), bnd))
            for cand in candidates:
                cand = _normalize_state(sig, cand)
                if cand not in seen:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return seen


def canonicalize(epi: CyclicEpimorphism) -> CyclicEpimorphism:
    """Lexicographically least representative of the move-closure orbit."""
    best = min(canonical_state_orbit(epi))
    return CyclicEpimorphism(epi.signature, epi.n, epi.character,
                             best[0], best[1], best[2],
                             strict_parity=epi.strict_parity)


# --- text form -------------------------------------------------------------

def format_epimorphism(epi: CyclicEpimorphism) -> str:
    parts = []
    if epi.cone_images:
        parts.append("cones=[%s]" % ",".join(map(str, epi.cone_images)))
    if epi.crosscap_images:
        parts.append("crosscaps=[%s]" % ",".join(map(str, epi.crosscap_images)))
    if epi.mirror_value is not None:
        parts.append("mirror=%d" % epi.mirror_value)
    if epi.boundary_images:
        parts.append("boundary=[%s]" % ",".join(map(str, epi.boundary_images)))
    return "Z%d @ %s : %s" % (epi.n, format_signature(epi.signature),
                              "; ".join(parts))


_EPI_RE = re.compile(r"^Z(?P<n>\d+)\s*@\s*(?P<sig>[^:]+?)\s*:\s*(?P<parts>.*)$")


def parse_epimorphism(text: str, character, strict_parity=True) -> CyclicEpimorphism:
    m = _EPI_RE.match(text.strip())
    if m is None:
        raise ValueError("cannot parse epimorphism %r" % text)
    n = int(m.group("n"))
    sig = parse_signature(m.group("sig"))
    cones, crosses, bnd = (), (), ()
    for part in filter(None, (p.strip() for p in m.group("parts").split(";"))):
        key, _, val = part.partition("=")
        key = key.strip()
        val = val.strip()
        if key == "mirror":
            if int(val) != n // 2:
                raise ValueError("reflections must map to n/2")
            continue
        nums = tuple(int(x) for x in val.strip("[]").split(",")) if val.strip("[]") else ()
        if key == "cones":
            cones = nums
        elif key == "crosscaps":
            crosses = nums
        elif key == "boundary":
            bnd = nums
        else:
            raise ValueError("unknown field %r in %r" % (key, text))
    if sig.mirror_circles and not bnd:
        bnd = (0,) * sig.mirror_circles
    return CyclicEpimorphism(sig, n, character, cones, crosses, bnd,
                             strict_parity=strict_parity)
