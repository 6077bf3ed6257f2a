from phaseless.measurements import (
    sample_measurements, sample_noise, observe, sign_matrix_apply,
    sign_matrix_transpose_apply, sign_matrix_dense,
)
from phaseless.operators import (
    SwapMatrix, RankTwoOperator, swap_matrix, swap_matrix_by_rotation,
    phi_matrix, q_matrix, varphi,
)
