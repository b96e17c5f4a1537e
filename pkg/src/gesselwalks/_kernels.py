"""Compiled inner loops.

Every kernel here has a pure Python twin in :mod:`gesselwalks.enumeration`
or :mod:`gesselwalks.walks`; callers pick a path via ``_accel.numba_enabled``
plus an int64-overflow bound.  Kernels only ever see sizes for which the
count fits in int64, so no overflow checks appear inside the loops.

Letter choices are tried in ascending code order (-d, ..., -1, 1, ..., d),
which makes enumeration order deterministic and shared with the fallback.
"""

import numpy as np

from ._accel import njit


@njit(cache=True)
def count_complete_nb(d, length):
    """Count complete Gessel words over d letter pairs by pruned DFS."""
    choice = np.full(length, -1, np.int64)
    diff = np.zeros(d, np.int64)  # per-letter unbarred minus barred
    pos = 0
    total = 0
    while pos >= 0:
        c = choice[pos]
        if c >= 0:  # undo the letter currently placed here
            if c < d:
                diff[d - 1 - c] += 1
            else:
                diff[c - d] -= 1
        c += 1
        placed = False
        while c < 2 * d:
            if c < d:
                axis = d - 1 - c
                diff[axis] -= 1
            else:
                axis = c - d
                diff[axis] += 1
            ok = True
            s = 0
            imb = 0
            for i in range(d - 1, -1, -1):
                s += diff[i]
                if s < 0:
                    ok = False
                    break
                imb += abs(diff[i])
            # prune once the imbalance cannot drain in the remaining letters
            if ok and imb > length - pos - 1:
                ok = False
            if ok:
                choice[pos] = c
                placed = True
                break
            if c < d:
                diff[d - 1 - c] += 1
            else:
                diff[c - d] -= 1
            c += 1
        if not placed:
            choice[pos] = -1
            pos -= 1
            continue
        if pos == length - 1:
            total += 1  # imbalance pruning forces all balances to zero here
        else:
            pos += 1
    return total


@njit(cache=True)
def profile_hist_d2_nb(length):
    """Histogram of complete d=2 words by their number of unbarred 2s."""
    n = length // 2
    hist = np.zeros(n + 1, np.int64)
    choice = np.full(length, -1, np.int64)
    b1 = 0
    b2 = 0
    n2 = 0
    pos = 0
    while pos >= 0:
        c = choice[pos]
        if c == 0:
            b2 += 1
        elif c == 1:
            b1 += 1
        elif c == 2:
            b1 -= 1
        elif c == 3:
            b2 -= 1
            n2 -= 1
        c += 1
        placed = False
        while c < 4:
            if c == 0:
                b2 -= 1
            elif c == 1:
                b1 -= 1
            elif c == 2:
                b1 += 1
            else:
                b2 += 1
                n2 += 1
            imb = abs(b1) + abs(b2)
            if b2 >= 0 and b1 + b2 >= 0 and imb <= length - pos - 1:
                choice[pos] = c
                placed = True
                break
            if c == 0:
                b2 += 1
            elif c == 1:
                b1 += 1
            elif c == 2:
                b1 -= 1
            else:
                b2 -= 1
                n2 -= 1
            c += 1
        if not placed:
            choice[pos] = -1
            pos -= 1
            continue
        if pos == length - 1:
            hist[n2] += 1
        else:
            pos += 1
    return hist


@njit(cache=True)
def marker_triangle_d2_nb(length):
    """Counts of complete d=2 words with a single 1/1-bar pair, by positions.

    Entry [i, j] (1-based, i < j) counts words whose two marker letters sit
    at positions i and j, in either order.
    """
    tri = np.zeros((length + 1, length + 1), np.int64)
    choice = np.full(length, -1, np.int64)
    b1 = 0
    b2 = 0
    pos1 = -1
    posb1 = -1
    pos = 0
    while pos >= 0:
        c = choice[pos]
        if c == 0:
            b2 += 1
        elif c == 1:
            b1 += 1
            posb1 = -1
        elif c == 2:
            b1 -= 1
            pos1 = -1
        elif c == 3:
            b2 -= 1
        c += 1
        placed = False
        while c < 4:
            mutated = False
            if c == 0:
                b2 -= 1
                mutated = True
            elif c == 1:
                if posb1 < 0:
                    b1 -= 1
                    posb1 = pos
                    mutated = True
            elif c == 2:
                if pos1 < 0:
                    b1 += 1
                    pos1 = pos
                    mutated = True
            else:
                b2 += 1
                mutated = True
            if mutated:
                if pos1 < 0 and posb1 < 0:
                    extra = 2  # both markers still owed a slot each
                else:
                    extra = abs(b1)
                rem = length - pos - 1
                if b2 >= 0 and b1 + b2 >= 0 and abs(b2) + extra <= rem:
                    choice[pos] = c
                    placed = True
                    break
                if c == 0:
                    b2 += 1
                elif c == 1:
                    b1 += 1
                    posb1 = -1
                elif c == 2:
                    b1 -= 1
                    pos1 = -1
                else:
                    b2 -= 1
            c += 1
        if not placed:
            choice[pos] = -1
            pos -= 1
            continue
        if pos == length - 1:
            lo = min(pos1, posb1) + 1
            hi = max(pos1, posb1) + 1
            tri[lo, hi] += 1
        else:
            pos += 1
    return tri


@njit(cache=True)
def advance_layer_d1_nb(layer, out, steps):
    n0 = layer.shape[0]
    out[:] = 0
    for k in range(steps.shape[0]):
        d0 = steps[k, 0]
        for x in range(max(0, -d0), min(n0, n0 - d0)):
            v = layer[x]
            if v != 0:
                out[x + d0] += v
    return out


@njit(cache=True)
def advance_layer_d2_nb(layer, out, steps):
    n0, n1 = layer.shape
    out[:, :] = 0
    for k in range(steps.shape[0]):
        d0 = steps[k, 0]
        d1 = steps[k, 1]
        for x in range(max(0, -d0), min(n0, n0 - d0)):
            for y in range(max(0, -d1), min(n1, n1 - d1)):
                v = layer[x, y]
                if v != 0:
                    out[x + d0, y + d1] += v
    return out


@njit(cache=True)
def advance_layer_d3_nb(layer, out, steps):
    n0, n1, n2 = layer.shape
    out[:, :, :] = 0
    for k in range(steps.shape[0]):
        d0 = steps[k, 0]
        d1 = steps[k, 1]
        d2 = steps[k, 2]
        for x in range(max(0, -d0), min(n0, n0 - d0)):
            for y in range(max(0, -d1), min(n1, n1 - d1)):
                for z in range(max(0, -d2), min(n2, n2 - d2)):
                    v = layer[x, y, z]
                    if v != 0:
                        out[x + d0, y + d1, z + d2] += v
    return out
