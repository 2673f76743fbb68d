"""Construction and verification of generalized bent functions Z_2^n -> Z_q."""

from .boolean import (
    AnfPoly,
    BoolFn,
    DimensionError,
    Gf2Matrix,
    SingularMatrixError,
    anf_to_table,
    dot_combine,
    gf2_invert,
    linear_perm_apply,
    linear_perm_inverse_apply,
    random_invertible,
    table_to_anf,
    xor,
)
from .construct import (
    PRESETS,
    ConstructionSpec,
    MmMap,
    build_components,
    construct_gbent_even,
    construct_gbent_odd,
    disjoint_pair,
    hc_check,
    pp0_spectrum,
    random_spec,
    semibent_from_map,
)
from .cyclotomic import CycInt, cyc_norm_sq
from .hadamard import NoMatch, RowMatch, hadamard_row, match_row
from .spectral import GenFn, GwhtSpectrum, WalshSpectrum, classify, compose, decompose, disjoint_spectra, fwht, gwht
from .verify import (
    ComponentFamily,
    GbentVerdict,
    SpectralRowReport,
    build_family,
    check_even,
    check_odd,
    disjoint_structure_check,
    is_gbent_direct,
    report_table,
)

__version__ = "0.1.0"
