from generator.network import (
    sample_gaussian_net, relu, forward, forward_batch, forward_layers, active_weights,
    end_to_end_jacobian, activation_margin, lipschitz_ratio,
)
from generator.angles import g_theta, angle_profile, profile_from_angle, breve_sequence, rho_d
