"""Exact computations with Nichols algebras over finite quotients of T and Gamma_n."""

from .scalars import FieldSpec, Scalar, format_scalar, parse_scalar
from .fpgroup import FiniteGroupImage, Presentation, gamma_presentation, t_presentation, todd_coxeter
from .quandle import FiniteQuandle, catalogue_quandle
from .ydmodule import CharacterSpec, YDModule, induce
from .adjoint import analyse_pair, compute_ladder, reflect
from .weylgroupoid import build_groupoid, longest_word_roots
from .nichols import BivariateSeries, FactorLibrary, hilbert_from_roots, verify_bigraded
from .scenarios import ScenarioConfig, parse_config, run_scenario

__all__ = [
    "BivariateSeries", "CharacterSpec", "FactorLibrary", "FieldSpec", "FiniteGroupImage", "FiniteQuandle",
    "Presentation", "Scalar", "ScenarioConfig", "YDModule", "analyse_pair", "build_groupoid", "catalogue_quandle",
    "compute_ladder", "format_scalar", "gamma_presentation", "hilbert_from_roots", "induce", "longest_word_roots",
    "parse_config", "parse_scalar", "reflect", "run_scenario", "t_presentation", "todd_coxeter", "verify_bigraded",
]
