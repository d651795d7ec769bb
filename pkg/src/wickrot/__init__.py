"""Coordinate machinery for Wick rotations between moduli spaces of surface
geometric structures: train tracks and the Thurston form, shear and
Fenchel-Nielsen charts with holonomy, earthquake and grafting flows, the
AdS/Minkowski/de Sitter correspondences, and symplectic pullback checks.
"""

__version__ = "0.1.0"

from .surfaces import (CurveWord, GroupPresentation, SurfaceSig,
                       WeightedMulticurve, build_presentation,
                       multicurve_scale, reduce_word)
from .traintrack import (Switch, TrainTrack, WeightSystem, carried_cocycle,
                         de_pullback_identity, double_earthquake_linear,
                         thurston_form, validate_weights, weight_space_basis)
from .shear import (DualLoop, ShearChart, ShearCoordinates, Triangulation,
                    cocycle_length, enumerate_carried_loops)
from .fenchel import FNChart, FNCoordinates, holonomy_from_fn
from .holonomy import (Holonomy, TraceLength, holonomy_from_shear,
                       lamination_length, panel_distance, trace_length)
from .teich import TeichPoint
from .flows import (ComplexShearCoordinates, CotangentPoint, delta,
                    double_earthquake, earthquake, earthquake_fn,
                    earthquake_shear, graft_fn, graft_shearbend)
from .cocycles import Cocycle, coboundary, cocycle_from_direction
from .goldman import (PairingKind, ads_pairing_decomposition, goldman_pairing,
                      tr0_pairing)
from .lorentz import (AdSPoint, DSPoint, MinkPoint, ads_from_plus_boundary,
                      ads_holonomy_pair, ds_from_projective,
                      mink_from_lamination, wick_pleated)
from .symplectic import (ChartedMap, PullbackReport, cotangent_form,
                         cotangent_matrix, de_charted_map, graft_charted_map,
                         imag_complex_matrix, pair_matrix, pullback_check,
                         wick_charted_map)
from .numerics import FDConfig
