from conditions.wdc import wdc_deviation
from conditions.rrcp import rrcp_deviation, angle_distortion_check, subgradient_vs_h
from conditions.tessellation import tessellation_count, sweep_patterns, probe_patterns
from conditions.spectral import submatrix_spectral_check, nested_submatrix_norms
from conditions.trends import strictly_decreasing, width_trend
