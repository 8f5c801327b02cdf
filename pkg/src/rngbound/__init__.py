"""Exact statistical distance and spectral bounds for linear-code entropy
conditioners over prime fields.

The pieces, bottom up:

  field_vec   -- prime moduli and the integer <-> p-ary digit indexing
  pmf         -- distributions on (F_p)^k: bias, distance, convolution
  transforms  -- Walsh-Hadamard / Fourier transforms, spectra, lambda*
  codes       -- generator matrices, weight distribution, CWE, distance
  analysis    -- exact output distribution of Y = G X and all bounds
  cli         -- the `rngbound` command
"""

from .analysis import (
    BoundEntry,
    BoundReport,
    SourceModel,
    analyze,
    bound_codeword_sum,
    bound_cwe,
    bound_min_distance,
    bound_single_variable,
    bound_sum_chain,
    bound_weight_distribution,
    exact_delta,
    output_pmf_bruteforce,
    output_pmf_spectral,
    output_spectrum,
    sum_chain,
)
from .codes import (
    LinearCode,
    codewords,
    complete_weight_enumerator,
    minimum_distance,
    parse_code,
    weight_distribution,
)
from .errors import CapacityError, FormatError, RankError
from .pmf import (
    Pmf,
    bias,
    convolve,
    from_bias,
    group_circulant,
    l1_from_uniform,
    parse_pmf,
    point_mass,
    product_bernoulli,
    tensor,
    tvd_from_uniform,
    uniform,
)
from .transforms import Spectrum, fourier, inverse_fourier, lambda_star, spectrum_of, wht

__version__ = "0.1.0"
