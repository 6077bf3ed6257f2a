from baselines.amplitude_flow import (
    thresholded_amplitude_flow, sample_sparse_signal, sign_invariant_error, hard_threshold,
)
from baselines.compare import sweep_compare, COMPARE_COLUMNS
