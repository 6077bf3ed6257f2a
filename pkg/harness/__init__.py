from harness.version import version_string
from harness.sweep import phase_transition_sweep, SWEEP_COLUMNS
from harness.runner import run, execute, load_config, summary_line
