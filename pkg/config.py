import os

BASE_DIR = os.path.dirname(os.path.abspath(__file__))
OUTPUT_DIR = os.path.join(os.getcwd(), "dpr_output")
LOG_DIR = os.environ.get("DPR_LOG_DIR", os.path.join(os.getcwd(), "logs"))
APP_NAME = "Deep Phase Retrieval"
VERSION = "0.3.0"

# RRCP normalisation constant
RRCP_L = 33.0

ANGLE_CLAMP_TOL = 1e-12
DEGENERATE_SIN_TOL = 1e-9
UNIT_NORM_TOL = 1e-8

# Spectral norms
POWER_ITERS = 200
POWER_TOL = 1e-9
DENSE_SVD_MAX_DIM = 256

# Solver defaults
DEFAULT_MAX_ITERS = 3000
DEFAULT_GRAD_TOL = 1e-6
DEFAULT_STEP_TOL = 1e-9
DIVERGENCE_WINDOW = 50
ZERO_ITERATE_JITTER = 1e-6
ADAM_STEP = 1e-2
ADAM_BETAS = (0.9, 0.999)
ADAM_EPS = 1e-8

SUCCESS_THRESHOLD = 1e-2
