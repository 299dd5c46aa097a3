"""Topology and cohomology of moduli of rank-two Real bundles over real curves."""
from .field import FieldSpec
from .series import TruncatedSeries, series_mul, series_div_cyclotomic, series_div
from .topology import (CurveKind, CurveTopology, CircleType, GaugeCase, RealBundleType,
                       QuaternionicBundleType, SurfaceDecomposition, ValidationError,
                       validate_curve, enumerate_real_bundles, validate_quaternionic,
                       decompose_surface, classify_gauge_case)
from .presentation import (GenKind, Generator, GradedAlgebraPresentation, SumRelation,
                           loop_group_presentation, presentation_poincare)
from .stratification import (Stratum, Verdict, OrientabilityVerdict, enumerate_strata,
                             normal_bundle_orientability, stratum_contribution,
                             betti_agreement_cutoff)
from .gauge import (CohomologyReport, Subject, bg_cohomology, build_koszul_tate,
                    moduli_cohomology, fixed_determinant_invariants, quaternionic_stack_report)
from .dga import CDGA, cohomology_dimensions, verify_bg

__version__ = "0.1.0"
