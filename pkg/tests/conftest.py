import numpy as np
import pytest

from grassop import ClassSignature, Subspace, orthonormalize


@pytest.fixture
def rng():
    return np.random.default_rng(20250809)


def basis_span(n, *indices):
    """Subspace spanned by the given standard basis vectors of C^n."""
    return Subspace(np.eye(n)[:, list(indices)])


def unit(n, vec):
    """One-dimensional subspace spanned by a vector."""
    return orthonormalize(np.asarray(vec, dtype=complex))


def haar_unitary(n, rng):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r).copy()
    d[d == 0] = 1.0
    return q * (d / np.abs(d))


SIG_22 = ClassSignature((1.0, 2.0), (2, 2), 4)
SIG_222 = ClassSignature((1.0, 2.0, 3.0), (2, 2, 2), 6)
SIG_0222 = ClassSignature((0.0, 1.0, 2.0, 4.0), (2, 2, 2, 2), 8)
