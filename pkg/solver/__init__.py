from solver.dpr import dpr_step, solve, solve_two_branch
from solver.restarts import run_restarts, initial_point
from solver.metrics import reconstruction_error, relative_latent_error
