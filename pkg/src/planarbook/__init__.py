"""
Open books on planar surfaces as Dehn twist words.

The package is organised by task: :mod:`surface` for curves and arcs,
:mod:`mcg` for twist words and their action, :mod:`invariants` for
veering, coefficients and filling, :mod:`classify` for verdicts and
:mod:`cli` for the command line.
"""
__version__ = '0.1.0'

from .errors import InvalidArgument, InvalidCurve, PlanarBookError
from .surface import (ArcWord, CurveWord, MultiCurve, PlanarSurface, boundary_curve,
                      curve_from_partition, geometric_intersection, is_boundary_parallel,
                      is_embedded, make_multicurve, make_surface, normalize)
from .mcg import (ConstructionParams, FamilyParams, OpenBook, TwistWord, apply,
                  build_construction, build_family, cap_off, mcg_equal,
                  strip_boundary_twists, twist)
from .invariants import (FdtcBound, PennerCertificate, fdtc_lower_bound, fdtc_via_reduction,
                         fills, find_left_veering_arc, kr_count, penner_certificate)
from .classify import Certificate, CapOffWitness, Hints, cap_off_vanishing_search, classify

__all__ = [
    'InvalidArgument',
    'InvalidCurve',
    'PlanarBookError',
    'ArcWord',
    'CurveWord',
    'MultiCurve',
    'PlanarSurface',
    'boundary_curve',
    'curve_from_partition',
    'geometric_intersection',
    'is_boundary_parallel',
    'is_embedded',
    'make_multicurve',
    'make_surface',
    'normalize',
    'ConstructionParams',
    'FamilyParams',
    'OpenBook',
    'TwistWord',
    'apply',
    'build_construction',
    'build_family',
    'cap_off',
    'mcg_equal',
    'strip_boundary_twists',
    'twist',
    'FdtcBound',
    'PennerCertificate',
    'fdtc_lower_bound',
    'fdtc_via_reduction',
    'fills',
    'find_left_veering_arc',
    'kr_count',
    'penner_certificate',
    'Certificate',
    'CapOffWitness',
    'Hints',
    'cap_off_vanishing_search',
    'classify',
]
