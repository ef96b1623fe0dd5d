"""Exact classification of cyclic symmetries of closed orientable surfaces.

The engine enumerates quotient-orbifold signatures by the Riemann-Hurwitz
equation, classifies the torsion-faithful surjections onto Z_n up to the
equivalence moves, verifies every class against an explicitly built
branched cover, and decides which classes extend to periodic maps of the
pair (3-sphere, surface).  A golden catalog pins the genus-2 table.
"""

from .signature import (OrbifoldSignature, PRESERVING, REVERSING,
                        enumerate_quotient_signatures, format_signature,
                        orbifold_euler_characteristic, parse_signature)
from .epimorphism import (CyclicEpimorphism, canonicalize,
                          enumerate_epimorphisms, format_epimorphism,
                          parse_epimorphism)
from .cover import (CombinatorialCover, SubquotientData, build_cover,
                    restrict_cover, trivial_cover, verify_cover)
from .classify import (ActionClass, FixedLocusProfile, PowerClassUnmatched,
                       class_record, classify, classify_all,
                       fixed_locus_profile, fixed_point_count, max_order,
                       power_class, verify_class)
from .extend import (BidiagonalIsometry, ExtendabilityVerdict,
                     SignedBidiagonalMap, apply_obstructions, decide,
                     decide_all, map_order, map_type, max_order_realization,
                     parse_word, quarter_turn_pair,
                     realize_from_constructions)
from .catalog import (Catalog, CatalogEntry, attach_catalog_names, crosscheck,
                      expected_brackets, load_catalog)

__version__ = "0.1.0"
