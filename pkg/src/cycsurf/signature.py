"""Quotient 2-orbifold signatures and their Riemann-Hurwitz enumeration.

The quotient of a closed orientable surface by a faithful finite cyclic
action is a compact 2-orbifold without corner reflectors: an underlying
compact surface, finitely many cone points whose indices divide the group
order, and boundary circles that are reflector (mirror) circles.  This
module models those signatures exactly and enumerates every signature
admissible for a given genus, order and orientation character via the
Riemann-Hurwitz equation, in exact rational arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

PRESERVING = "preserving"
REVERSING = "reversing"
CHARACTERS = (PRESERVING, REVERSING)


def check_character(character):
    if character not in CHARACTERS:
        raise ValueError("character must be %r or %r, got %r"
                         % (PRESERVING, REVERSING, character))


@dataclass(frozen=True)
class OrbifoldSignature:
    """A closed-quotient 2-orbifold type.

    ``genus_or_crosscaps`` counts handles when ``orientable`` and crosscaps
    otherwise.  ``cone_indices`` is kept sorted; equality is structural.
    Boundary circles are always reflector circles (``mirror_circles``) and
    corner reflectors cannot occur for cyclic stabilizers, so neither
    plain boundary nor corners are representable.
    """

    orientable: bool
    genus_or_crosscaps: int
    cone_indices: tuple = ()
    mirror_circles: int = 0

    def __post_init__(self):
        cones = tuple(sorted(int(q) for q in self.cone_indices))
        object.__setattr__(self, "cone_indices", cones)
        if any(q < 2 for q in cones):
            raise ValueError("cone indices must be >= 2: %r" % (cones,))
        if self.genus_or_crosscaps < 0:
            raise ValueError("negative genus/crosscap count")
        if not self.orientable and self.genus_or_crosscaps == 0:
            raise ValueError("non-orientable surface needs >= 1 crosscap")
        if self.mirror_circles < 0:
            raise ValueError("negative mirror count")

    @property
    def cone_count(self):
        return len(self.cone_indices)

    def underlying_euler(self) -> int:
        """Euler characteristic of the underlying compact surface."""
        if self.orientable:
            return 2 - 2 * self.genus_or_crosscaps - self.mirror_circles
        return 2 - self.genus_or_crosscaps - self.mirror_circles

    def sort_key(self):
        return (0 if self.orientable else 1, self.genus_or_crosscaps,
                self.mirror_circles, self.cone_indices)

    def __str__(self):
        return format_signature(self)


def orbifold_euler_characteristic(sig: OrbifoldSignature) -> Fraction:
    """chi(underlying) minus the cone-point defect, as an exact rational."""
    defect = sum(Fraction(q - 1, q) for q in sig.cone_indices)
    return Fraction(sig.underlying_euler()) - defect


def format_signature(sig: OrbifoldSignature) -> str:
    if sig.orientable:
        if sig.genus_or_crosscaps == 0:
            head = "D" if sig.mirror_circles == 1 else "S2"
        elif sig.genus_or_crosscaps == 1:
            head = "T"
        else:
            head = "T%d" % sig.genus_or_crosscaps
    else:
        head = "N%d" % sig.genus_or_crosscaps
    text = head
    if sig.cone_indices:
        text += "(%s)" % ",".join(str(q) for q in sig.cone_indices)
    if sig.mirror_circles:
        text += "|m%d" % sig.mirror_circles
    return text


_SIG_RE = re.compile(
    r"^(?P<head>S2|D|T(?P<tg>\d+)?|N(?P<nc>\d+))"
    r"(\((?P<cones>\d+(,\d+)*)\))?"
    r"(\|m(?P<mirrors>\d+))?$")


def parse_signature(text: str) -> OrbifoldSignature:
    """Inverse of :func:`format_signature` (also accepts ``S2|m1`` for ``D``)."""
    m = _SIG_RE.match(text.strip())
    if m is None:
        raise ValueError("cannot parse signature %r" % text)
    head = m.group("head")
    mirrors = int(m.group("mirrors")) if m.group("mirrors") else 0
    if head == "D":
        orientable, count = True, 0
        if not mirrors:
            mirrors = 1
    elif head == "S2":
        orientable, count = True, 0
    elif head.startswith("T"):
        orientable = True
        count = int(m.group("tg")) if m.group("tg") else 1
    else:
        orientable, count = False, int(m.group("nc"))
    cones = ()
    if m.group("cones"):
        cones = tuple(int(q) for q in m.group("cones").split(","))
    return OrbifoldSignature(orientable, count, cones, mirrors)


def divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def _cone_multisets(total: Fraction, allowed, start=0):
    """Nondecreasing index tuples with defect sum exactly ``total``."""
    if total == 0:
        yield ()
        return
    if total < 0:
        return
    for pos in range(start, len(allowed)):
        q = allowed[pos]
        step = Fraction(q - 1, q)
        if step > total:
            continue
        for rest in _cone_multisets(total - step, allowed, pos):
            yield (q,) + rest


def enumerate_quotient_signatures(g: int, n: int, character) -> list:
    """All signatures with n * chi_orb = 2 - 2g that pass local admissibility.

    Local rules: cone indices divide n (and divide n/2 for a reversing
    character, since point stabilizers are rotations in the preserving
    subgroup); a preserving character forces an orientable underlying
    surface with no mirrors; a reversing character needs a crosscap or a
    mirror circle; mirror circles require n/2 odd, because a reflection
    must map to the unique order-2 element and that element has to be
    orientation-reversing.
    """
    check_character(character)
    if g < 2:
        raise ValueError("genus must be >= 2")
    if n < 2:
        raise ValueError("order must be >= 2")
    if character == REVERSING and n % 2 != 0:
        raise ValueError(
            "orientation-reversing periodic maps have even order; n=%d is odd" % n)

    target = Fraction(2 - 2 * g, n)
    if character == PRESERVING:
        allowed = [q for q in divisors(n) if q >= 2]
    else:
        allowed = [q for q in divisors(n // 2) if q >= 2]
    mirrors_ok = character == REVERSING and (n // 2) % 2 == 1

    found = []
    # Orientable underlying surface.
    ghat = 0
    while 2 - 2 * ghat >= target:
        max_m = 2 - 2 * ghat - target
        m = 0
        while m <= max_m:
            budget = Fraction(2 - 2 * ghat - m) - target
            ok_mirrors = (m == 0) or mirrors_ok
            # Reversing needs a nontrivial character carrier: crosscap or mirror.
            ok_char = (character == PRESERVING and m == 0) or \
                      (character == REVERSING and m >= 1 and mirrors_ok)
            if ok_mirrors and ok_char:
                for cones in _cone_multisets(budget, allowed):
                    found.append(OrbifoldSignature(True, ghat, cones, m))
            m += 1
        ghat += 1

    # Non-orientable underlying surface (reversing only).
    if character == REVERSING:
        c = 1
        while 2 - c >= target:
            max_m = 2 - c - target
            m = 0
            while m <= max_m:
                if m == 0 or mirrors_ok:
                    budget = Fraction(2 - c - m) - target
                    for cones in _cone_multisets(budget, allowed):
                        found.append(OrbifoldSignature(False, c, cones, m))
                m += 1
            c += 1

    found.sort(key=OrbifoldSignature.sort_key)
    return found
