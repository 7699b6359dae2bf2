"""Pure-numpy minimum weight: enumerate messages in chunks, multiply, count."""

import numpy as np


def min_weight(rows, p: int, e: int, stop_at: int = 1, chunk: int = 1 << 15) -> int:
    rows = np.asarray(rows, dtype=np.int64)
    k, nd = rows.shape
    if k == 0 or nd == 0:
        return -1
    nsym = nd // e
    total = p**k
    pw = p ** np.arange(k, dtype=np.int64)
    best = -1
    for lo in range(1, total, chunk):
        t = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        msgs = (t[:, None] // pw) % p
        cw = (msgs @ rows) % p
        w = cw.reshape(-1, nsym, e).any(axis=2).sum(axis=1)
        w = w[w > 0]
        if w.size:
            m = int(w.min())
            best = m if best < 0 else min(best, m)
            if best <= stop_at:
                break
    return best
