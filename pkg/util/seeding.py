"""
Seed derivation for trials and restarts.

A master seed expands into independent streams with a counter scheme:
the seed for (stream, index) is the first 32-bit word of
``SeedSequence(master, spawn_key=(stream, index))``. Any consumer that knows
the master seed, the stream id and the counter reproduces the assignment.
"""
import numpy as np

# Stream ids
NET_STREAM = 0
ENSEMBLE_STREAM = 1
LATENT_STREAM = 2
NOISE_STREAM = 3
RESTART_STREAM = 4
PROBE_STREAM = 5
BASELINE_STREAM = 6
TRIAL_STREAM = 7


def derive_seed(master, stream, index=0):
    """Return a 32-bit integer seed for the (stream, index) counter."""
    if master is None:
        raise ValueError("A master seed is required")
    seq = np.random.SeedSequence(int(master), spawn_key=(int(stream), int(index)))
    return int(seq.generate_state(1, dtype=np.uint32)[0])


def make_rng(seed):
    return np.random.default_rng(seed)
