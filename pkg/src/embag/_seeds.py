"""Seed-stream derivation.

All randomness in the package flows through ``numpy.random.SeedSequence``
keyed by ``(root_seed, stream_tag, *indices)`` and drives a PCG64 bit
generator. The tags keep the partition shuffles, weight initialization,
mini-batch ordering, member-seed derivation, synthetic data and k-means
restarts on independent streams, so any single member or partition can be
reproduced in isolation and in any execution order.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError

STREAM_PARTITION = 1
STREAM_MODEL_INIT = 2
STREAM_MODEL_SHUFFLE = 3
STREAM_MEMBER_SEED = 4
STREAM_DATA = 5
STREAM_KMEANS = 6


def check_seed(seed, name: str = "seed") -> int:
    """Validate and normalize a root seed (non-negative integer)."""
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise InvalidArgumentError(f"{name} must be an integer, got {seed!r}")
    if seed < 0:
        raise InvalidArgumentError(f"{name} must be >= 0, got {seed}")
    return int(seed)


def generator(root_seed: int, stream: int, *indices: int) -> np.random.Generator:
    """Deterministic PCG64 generator for one (seed, stream, indices) tuple."""
    entropy = (check_seed(root_seed), int(stream)) + tuple(int(i) for i in indices)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def derive_seed(root_seed: int, stream: int, *indices: int) -> int:
    """Collapse a (seed, stream, indices) tuple into a fresh integer seed."""
    entropy = (check_seed(root_seed), int(stream)) + tuple(int(i) for i in indices)
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])
