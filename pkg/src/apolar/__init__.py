"""Graded characters and Hilbert functions of S_n-stable Gorenstein algebras
whose socle is an orbit sum of a power of a linear form."""

from .apolarity import (
    CoeffTuple,
    catalecticant_matrix,
    graded_character_bruteforce,
    hilbert_function_bruteforce,
    orbit_power_character,
    orbit_power_graded_character,
    orbit_sum,
    phi_matrix,
    psi_matrix,
)
from .charengine import (
    CharacterReport,
    VerificationReport,
    character_report,
    graded_character_formula,
    hilbert_series_formula,
    verify,
    waring_certificate,
)
from .partitions import mu_of, n_stat, orbit_size, partitions_of, syt_count
from .poly import Poly, diff, parse_poly
from .snrep import ClassFunction, GradedCharacter, decompose, irr_char_value
from .tableaux import SSYT, charge, kostka_foulkes, r_mu_character, ssyt_enumerate
from .tpoly import TPoly

__version__ = "0.1.0"
