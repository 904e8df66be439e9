"""Pure-numpy implementations of the hot numerical kernels.

Twin of the compiled ``_core`` extension; both expose the same three
functions on the raw 0-based amplitude matrix ``amp[i, j]`` (coefficient of
the basis ket with the up electron on site ``i`` and the down electron on
site ``j``).  Reductions run in a fixed order so results do not depend on
the caller's threading.
"""

import numpy as np


def hubbard_apply(amp, t, u, periodic):
    """Apply the two-electron Hubbard Hamiltonian to an amplitude matrix.

    H = -t (nearest-neighbour hop of either electron) + U (double occupancy),
    acting row-wise for the up electron and column-wise for the down one.
    Returns a new array; ``amp`` is untouched.
    """
    out = np.zeros_like(amp)
    out[1:, :] -= t * amp[:-1, :]
    out[:-1, :] -= t * amp[1:, :]
    out[:, 1:] -= t * amp[:, :-1]
    out[:, :-1] -= t * amp[:, 1:]
    if periodic:
        out[0, :] -= t * amp[-1, :]
        out[-1, :] -= t * amp[0, :]
        out[:, 0] -= t * amp[:, -1]
        out[:, -1] -= t * amp[:, 0]
    if u != 0.0:
        idx = np.arange(amp.shape[0])
        out[idx, idx] += u * amp[idx, idx]
    return out


def cross_overlap_sum(amp, a_idx, b_idx):
    """Sum of conj(amp[i, j]) * amp[j, i] over i in region A, j in region B."""
    block_ab = amp[np.ix_(a_idx, b_idx)]
    block_ba = amp[np.ix_(b_idx, a_idx)]
    return complex(np.sum(np.conj(block_ab) * block_ba.T))


def sector_weights(amp, a_idx, b_idx):
    """Probability weight in the (up in A, down in B), (up in B, down in A)
    and remaining sectors.  Returns (w_nonflip, w_flip, w_other); the three
    add up to the squared norm of ``amp`` exactly.
    """
    prob = np.abs(amp) ** 2
    w_nonflip = float(np.sum(prob[np.ix_(a_idx, b_idx)]))
    w_flip = float(np.sum(prob[np.ix_(b_idx, a_idx)]))
    w_other = float(np.sum(prob)) - w_nonflip - w_flip
    return w_nonflip, w_flip, w_other
