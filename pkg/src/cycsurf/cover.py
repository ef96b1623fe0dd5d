"""Brute-force verifier: explicit branched covers as cell complexes.

A quotient signature is realized as a one-vertex polygon: one interior
vertex, a loop edge per generator, one big face whose boundary spells the
long relation, and a small disc face around every cone point.  A mirror
circle contributes its own vertex, the mirror loop, and a connector edge,
with the big face running connector - mirror - connector back.

The n-fold cover determined by generator images is then assembled cell by
cell (a voltage construction): vertices and interior edges have n lifts
shifted by their voltages, a mirror vertex has one lift per coset of the
reflection image, cone discs close up after the order of their voltage,
and mirror edges fold onto two big-face lifts whenever the reflection
image is nonzero.  Euler characteristic, connectivity, orientability, and
the deck fixed-point data are read off the finished complex; nothing is
inherited from the enumeration that produced the input.

The same machinery with voltages reduced modulo a divisor d of n builds
the intermediate quotient by the subgroup generated by h^d, including its
residual cone points and surviving mirror circles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .signature import OrbifoldSignature, REVERSING, orbifold_euler_characteristic
from .epimorphism import CyclicEpimorphism, order_mod


class CoverConstructionError(RuntimeError):
    pass


@dataclass
class CombinatorialCover:
    """Cell complex of a cover together with its deck bookkeeping."""

    sig: OrbifoldSignature
    degree: int                      # sheets of this cover
    vertices: set = field(default_factory=set)
    edges: dict = field(default_factory=dict)      # id -> (src, dst)
    faces: dict = field(default_factory=dict)      # id -> ((edge, dir), ...)
    mirror_edges: set = field(default_factory=set)
    cone_faces: dict = field(default_factory=dict)  # id -> (cone pos, ord, residual)
    cone_volts: tuple = ()
    bnd_volts: tuple = ()
    refl_volts: tuple = ()
    mirror_modulus: tuple = ()

    # -- invariants ---------------------------------------------------------

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        parent = {v: v for v in self.vertices}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for src, dst in self.edges.values():
            ra, rb = find(src), find(dst)
            if ra != rb:
                parent[ra] = rb
        roots = {find(v) for v in self.vertices}
        return len(roots) == 1

    def edge_incidences(self):
        inc = {e: [] for e in self.edges}
        for fid, boundary in self.faces.items():
            for eid, direction in boundary:
                inc[eid].append((fid, direction))
        return inc

    def orientation(self):
        """(orientable, face signs) by greedy propagation with conflicts.

        An interior edge must be traversed once in each net direction by
        its two face incidences; mirror edges are boundary and impose
        nothing.
        """
        inc = self.edge_incidences()
        for eid, hits in inc.items():
            expected = 1 if eid in self.mirror_edges else 2
            if len(hits) != expected:
                raise CoverConstructionError(
                    "edge %r has %d face incidences, expected %d"
                    % (eid, len(hits), expected))
        signs = {}
        for root in sorted(self.faces):
            if root in signs:
                continue
            signs[root] = 1
            stack = [root]
            while stack:
                fid = stack.pop()
                for eid, direction in self.faces[fid]:
                    if eid in self.mirror_edges:
                        continue
                    (f1, d1), (f2, d2) = inc[eid]
                    if f1 == f2:
                        if d1 == d2:
                            return False, None
                        continue
                    other, dother = (f2, d2) if f1 == fid else (f1, d1)
                    mine = d1 if f1 == fid else d2
                    needed = -signs[fid] * mine * dother
                    if other in signs:
                        if signs[other] != needed:
                            return False, None
                    else:
                        signs[other] = needed
                        stack.append(other)
        return True, signs

    # -- deck action --------------------------------------------------------

    def fixed_point_count(self, delta: int) -> int:
        """Isolated fixed points of the deck element ``delta`` (nonzero)."""
        delta %= self.degree
        if delta == 0:
            raise ValueError("identity deck element")
        total = 0
        for fid, (pos, ordv, residual) in self.cone_faces.items():
            v = self.cone_volts[pos]
            if delta % gcd(v, self.degree) == 0:
                total += 1
        return total

    def fixed_mirror_circles(self, delta: int) -> int:
        """Circles of mirror-lift edges fixed pointwise by ``delta``."""
        delta %= self.degree
        if delta == 0:
            raise ValueError("identity deck element")
        total = 0
        for j, modulus in enumerate(self.mirror_modulus):
            if modulus == 0 or self.refl_volts[j] == 0:
                continue  # mirror survives as boundary; no folded circles
            if delta % modulus == 0:
                step = self.bnd_volts[j] % modulus
                length = modulus // gcd(step, modulus) if modulus > 1 else 1
                total += modulus // length
        return total

    def mirror_cycles(self):
        """Connected mirror circles of this complex, as lists of edges."""
        cycles = []
        for j, modulus in enumerate(self.mirror_modulus):
            if self.refl_volts[j] != 0:
                continue
            step = self.bnd_volts[j] % modulus if modulus > 1 else 0
            seen = set()
            for start in range(modulus):
                if start in seen:
                    continue
                cyc = []
                c = start
                while c not in seen:
                    seen.add(c)
                    cyc.append(("m", j, c))
                    c = (c + step) % modulus
                cycles.append(cyc)
        return cycles

    def complement_components(self, removed_edges) -> int:
        """Components of the surface with the given circles removed.

        Faces are regions; two faces are in one component when they share
        an edge that survives.
        """
        removed = set(removed_edges)
        inc = self.edge_incidences()
        parent = {f: f for f in self.faces}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for eid, hits in inc.items():
            if eid in removed or eid in self.mirror_edges:
                continue
            if len(hits) == 2:
                ra, rb = find(hits[0][0]), find(hits[1][0])
                if ra != rb:
                    parent[ra] = rb
        return len({find(f) for f in self.faces})


def _pick_handle_voltages(epi: CyclicEpimorphism):
    """Concrete surjectivity-completing handle images, deterministic."""
    n = epi.n
    rank = epi.handle_rank
    if rank == 0:
        return ()
    g = n
    for x in epi.cone_images + epi.crosscap_images + epi.boundary_images:
        g = gcd(g, x)
    if epi.mirror_value is not None:
        g = gcd(g, epi.mirror_value)
    if g == 1:
        return (0,) * rank
    step = 2 if (epi.strict_parity and epi.character == REVERSING) else 1
    for h in range(step, n, step):
        if gcd(g, gcd(h, n)) == 1:
            return (h,) + (0,) * (rank - 1)
    raise CoverConstructionError(
        "cover disconnected by construction is a bug in admissibility: %s" % epi)


def build_voltage_complex(sig: OrbifoldSignature, degree: int,
                          cone_volts, cross_volts, handle_volts, bnd_volts,
                          refl_volts, base_cone_orders) -> CombinatorialCover:
    """Assemble the degree-fold cover of the one-vertex polygon base."""
    N = degree
    cone_volts = tuple(v % N for v in cone_volts)
    cross_volts = tuple(v % N for v in cross_volts)
    handle_volts = tuple(v % N for v in handle_volts)
    bnd_volts = tuple(v % N for v in bnd_volts)
    refl_volts = tuple(v % N for v in refl_volts)

    cov = CombinatorialCover(sig=sig, degree=N)
    cov.cone_volts = cone_volts
    cov.bnd_volts = bnd_volts
    cov.refl_volts = refl_volts

    b = sig.mirror_circles
    moduli = []
    for j in range(b):
        r = refl_volts[j]
        if r == 0:
            moduli.append(N)
        else:
            if (2 * r) % N != 0:
                raise CoverConstructionError("reflection image must have order <= 2")
            moduli.append(N // 2 if N > 1 else 1)
    cov.mirror_modulus = tuple(moduli)

    for s in range(N):
        cov.vertices.add(("v", s))
    for j in range(b):
        for c in range(moduli[j]):
            cov.vertices.add(("u", j, c))

    def add_edge(eid, src, dst):
        cov.edges[eid] = (src, dst)

    for i, v in enumerate(cone_volts):
        for s in range(N):
            add_edge(("x", i, s), ("v", s), ("v", (s + v) % N))
    for l, v in enumerate(cross_volts):
        for s in range(N):
            add_edge(("d", l, s), ("v", s), ("v", (s + v) % N))
    for l, v in enumerate(handle_volts):
        for s in range(N):
            add_edge(("h", l, s), ("v", s), ("v", (s + v) % N))
    for j in range(b):
        for s in range(N):
            add_edge(("t", j, s), ("v", s), ("u", j, s % moduli[j]))
        step = bnd_volts[j] % moduli[j] if moduli[j] > 1 else 0
        for c in range(moduli[j]):
            add_edge(("m", j, c), ("u", j, c), ("u", j, (c + step) % moduli[j]))
            if refl_volts[j] == 0:
                cov.mirror_edges.add(("m", j, c))

    # Big-face lifts: one per sheet, walking the long-relation word.
    for s in range(N):
        boundary = []
        cur = s
        for i, v in enumerate(cone_volts):
            boundary.append((("x", i, cur), 1))
            cur = (cur + v) % N
        for j in range(b):
            boundary.append((("t", j, cur), 1))
            boundary.append((("m", j, cur % moduli[j]), 1))
            cur = (cur + bnd_volts[j]) % N
            boundary.append((("t", j, cur), -1))
        if sig.orientable:
            pairs = [(handle_volts[2 * k], handle_volts[2 * k + 1])
                     for k in range(len(handle_volts) // 2)]
            for k, (va, vb) in enumerate(pairs):
                la, lb = 2 * k, 2 * k + 1
                boundary.append((("h", la, cur), 1))
                cur = (cur + va) % N
                boundary.append((("h", lb, cur), 1))
                cur = (cur + vb) % N
                boundary.append((("h", la, (cur - va) % N), -1))
                cur = (cur - va) % N
                boundary.append((("h", lb, (cur - vb) % N), -1))
                cur = (cur - vb) % N
        else:
            for l, v in enumerate(cross_volts):
                boundary.append((("d", l, cur), 1))
                cur = (cur + v) % N
                boundary.append((("d", l, cur), 1))
                cur = (cur + v) % N
        if cur != s:
            raise CoverConstructionError("long-relation voltage does not close")
        cov.faces[("F", s)] = tuple(boundary)

    # Cone-disc lifts: close after the order of their voltage.
    for i, v in enumerate(cone_volts):
        ordv = order_mod(v, N)
        q = base_cone_orders[i]
        if q % ordv != 0:
            raise CoverConstructionError("cone voltage order does not divide index")
        residual = q // ordv
        done = set()
        for s in range(N):
            if s in done:
                continue
            orbit = [(s + k * v) % N for k in range(ordv)]
            done.update(orbit)
            fid = ("C", i, min(orbit))
            cov.faces[fid] = tuple((("x", i, t), 1) for t in orbit)
            cov.cone_faces[fid] = (i, ordv, residual)

    return cov


def build_cover(epi: CyclicEpimorphism) -> CombinatorialCover:
    """The surface cover determined by an admissible epimorphism."""
    n = epi.n
    sig = epi.signature
    handle_volts = _pick_handle_voltages(epi)
    refl = tuple([n // 2] * sig.mirror_circles)
    cov = build_voltage_complex(sig, n, epi.cone_images, epi.crosscap_images,
                                handle_volts, epi.boundary_images, refl,
                                sig.cone_indices)
    if not cov.is_connected():
        raise CoverConstructionError(
            "cover disconnected by construction is a bug in admissibility: %s" % epi)
    for fid, (pos, ordv, residual) in cov.cone_faces.items():
        if residual != 1:
            raise CoverConstructionError("cone disc failed to unwrap: %s" % epi)
    return cov


def trivial_cover(sig: OrbifoldSignature) -> CombinatorialCover:
    """Degree-1 cover of a cone-free signature: the base itself."""
    if sig.cone_indices:
        raise ValueError("trivial cover only defined without cone points")
    cross = 0 if sig.orientable else sig.genus_or_crosscaps
    handles = 2 * sig.genus_or_crosscaps if sig.orientable else 0
    return build_voltage_complex(sig, 1, (), (0,) * cross, (0,) * handles,
                                 (0,) * sig.mirror_circles,
                                 (0,) * sig.mirror_circles, ())


def formula_fixed_points(epi: CyclicEpimorphism, d: int) -> int:
    """Stabilizer-counting formula: sum of n/q over cones with (n/q) | d."""
    n = epi.n
    total = 0
    for q in epi.signature.cone_indices:
        if d % (n // q) == 0:
            total += n // q
    return total


def verify_cover(epi: CyclicEpimorphism) -> dict:
    """Oracle report for one epimorphism; mismatches are entries, not errors."""
    cov = build_cover(epi)
    n = epi.n
    orientable, _ = cov.orientation()
    chi = cov.euler_characteristic()
    report = {
        "chi": chi,
        "orientable": orientable,
        "connected": cov.is_connected(),
        "fixed_counts": {},
    }
    mismatches = []
    expected_chi = n * orbifold_euler_characteristic(epi.signature)
    if Fraction(chi) != expected_chi:
        mismatches.append("chi %s != n * chi_orb %s" % (chi, expected_chi))
    for d in range(1, n):
        if epi.character == REVERSING and d % 2 == 1:
            continue
        count = cov.fixed_point_count(d)
        report["fixed_counts"][d] = count
        if count != formula_fixed_points(epi, d):
            mismatches.append("fixed count mismatch at power %d" % d)
    if epi.signature.mirror_circles:
        report["involution_circles"] = cov.fixed_mirror_circles(n // 2)
    report["mismatches"] = mismatches
    return report


# --- intermediate quotients -------------------------------------------------

@dataclass
class SubquotientData:
    """The quotient by the subgroup generated by h^delta, read off a cover."""

    signature: OrbifoldSignature
    order: int                      # n' = n / delta
    cone_data: tuple                # ((index, image in Z_{n'}), ...)
    boundary_data: tuple            # sorted boundary images in Z_{n'}
    orientable_underlying: bool


def restrict_cover(epi: CyclicEpimorphism, delta: int) -> SubquotientData:
    """Build the delta-fold intermediate cover and extract its orbifold data.

    Cone images of the residual action are the order-completed multiples
    of the base images; on an orientable intermediate quotient their
    signs follow a coherent global face orientation (sheets reached
    through one-sided loops measure rotations oppositely), and on a
    non-orientable quotient individual cone signs are not invariants, so
    a fixed choice is taken and absorbed by canonicalization.
    """
    n = epi.n
    if n % delta != 0 or not 1 <= delta < n:
        raise ValueError("delta must be a proper divisor of n")
    n_prime = n // delta
    sig = epi.signature
    handle_volts = _pick_handle_voltages(epi)
    refl_full = [n // 2] * sig.mirror_circles
    cov = build_voltage_complex(
        sig, delta,
        tuple(v % delta for v in epi.cone_images),
        tuple(v % delta for v in epi.crosscap_images),
        tuple(v % delta for v in handle_volts),
        tuple(v % delta for v in epi.boundary_images),
        tuple(r % delta for r in refl_full),
        sig.cone_indices)
    if not cov.is_connected():
        raise CoverConstructionError("intermediate cover disconnected: %s" % epi)

    mirror_cycles = cov.mirror_cycles()
    orientable, signs = cov.orientation()

    def coordinate(value_mod_n):
        g = value_mod_n % n
        if g % delta != 0:
            raise CoverConstructionError("residual image not in the subgroup")
        return (g // delta) % n_prime

    cone_data = []
    for fid in sorted(cov.cone_faces):
        pos, ordv, residual = cov.cone_faces[fid]
        if residual == 1:
            continue
        base_coord = coordinate(ordv * epi.cone_images[pos])
        s = signs[fid] if signs is not None else 1
        cone_data.append((residual, (s * base_coord) % n_prime))
    cone_data.sort()

    boundary_data = []
    for cyc in mirror_cycles:
        j = cyc[0][1]
        boundary_data.append(coordinate(len(cyc) * epi.boundary_images[j]))
    boundary_data.sort()

    chi = cov.euler_characteristic()
    b_prime = len(mirror_cycles)
    if orientable:
        ghat2 = 2 - b_prime - chi
        if ghat2 % 2 != 0 or ghat2 < 0:
            raise CoverConstructionError("inconsistent orientable quotient data")
        new_sig = OrbifoldSignature(True, ghat2 // 2,
                                    tuple(q for q, _ in cone_data), b_prime)
    else:
        crosscaps = 2 - b_prime - chi
        new_sig = OrbifoldSignature(False, crosscaps,
                                    tuple(q for q, _ in cone_data), b_prime)
    return SubquotientData(new_sig, n_prime, tuple(cone_data),
                           tuple(boundary_data), orientable)
