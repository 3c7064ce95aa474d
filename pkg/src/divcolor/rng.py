"""Seeded random-stream helpers shared by the Monte-Carlo samplers.

Every sampler takes an explicit integer seed and derives one independent
sub-stream per block of samples from (seed, block index).  Blocks can be
drawn concurrently and concatenated; the output depends only on the seed,
never on the scheduling.
"""

from __future__ import annotations

import numpy as np

BLOCK_SIZE = 4096


def stream(seed, index=0):
    """Independent random generator for the given (seed, stream index)."""
    seed = int(seed)
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    return np.random.default_rng(np.random.SeedSequence([seed, int(index)]))


def blocks(count, block_size=BLOCK_SIZE):
    """Yield (block index, block size) pairs covering `count` samples."""
    count = int(count)
    if count < 0:
        raise ValueError("count must be non-negative")
    index = 0
    while count > 0:
        size = min(block_size, count)
        yield index, size
        index += 1
        count -= size
