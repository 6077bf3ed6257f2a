from landscape.instance import make_instance, sample_instance
from landscape.objective import (
    objective, noiseless_objective, subgradient, boundary_margin,
)
from landscape.directions import (
    h_direction, w_direction, h_tilde, idealized_loss, s_beta_membership,
)
from landscape.critical import find_critical_points, scan_grid
