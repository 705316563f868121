"""Almost normal matrices: a normal diagonal block plus a rank-one coupling column."""

from __future__ import annotations

import numpy as np

from ..errors import InputError


def gen_almost_normal(lams, bs, mu) -> np.ndarray:
    """``[[diag(lams), bs], [0, mu]]`` of size ``len(lams) + 1``.

    ``lams`` and ``bs`` have length ``n - 1``.
    """
    lams = np.asarray(lams, dtype=complex).reshape(-1)
    bs = np.asarray(bs, dtype=complex).reshape(-1)
    if lams.size != bs.size or lams.size == 0:
        raise InputError("lams and bs must be nonempty and of equal length")
    m = lams.size
    A = np.zeros((m + 1, m + 1), dtype=complex)
    A[np.arange(m), np.arange(m)] = lams
    A[:m, m] = bs
    A[m, m] = complex(mu)
    return A
