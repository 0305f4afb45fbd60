"""
Independent floating-point oracle: Fox calculus on plain letter lists and
complex numpy matrices, sharing no code with the exact pipeline.
"""

import cmath

import numpy as np


def letters(text):
    """'mu x1^2 mu^-1' -> [('mu', 1), ('x1', 1), ('x1', 1), ('mu', -1)]."""
    out = []
    for tok in text.split():
        name, _, e = tok.partition("^")
        e = int(e) if e else 1
        out.extend([(name, 1 if e > 0 else -1)] * abs(e))
    return out


def fox_matrix(word, gen, images, degrees, t):
    """Phi(d word / d gen) as a complex matrix, by the letter-wise product rule."""
    n = next(iter(images.values())).shape[0]
    prefix = np.eye(n, dtype=complex)
    deg = 0
    acc = np.zeros((n, n), dtype=complex)
    for g, s in word:
        a = images[g] if s > 0 else np.linalg.inv(images[g])
        d = degrees[g] * s
        if g == gen:
            if s > 0:
                acc += prefix * t ** deg
            else:
                acc -= prefix @ a * t ** (deg + d)
        prefix = prefix @ a
        deg += d
    return acc


def tap_value(relators, gens, images, degrees, t, column):
    """det Phi(Jacobian without column) / det Phi(column - 1) at a complex t."""
    rels = [letters(r) for r in relators]
    cols = [g for g in gens if g != column]
    rows = [np.hstack([fox_matrix(r, g, images, degrees, t) for g in cols]) for r in rels]
    num = np.linalg.det(np.vstack(rows))
    n = images[column].shape[0]
    den = np.linalg.det(images[column] * t ** degrees[column] - np.eye(n))
    return num / den


def zeta(q, k=1):
    return cmath.exp(2j * cmath.pi * k / q)


def lin_relators(m, n, sign):
    return ["mu x1^%d mu^-1 x2 x1^%d" % (m, -m),
            "mu x2^%d x1 mu^-1 x2^%d" % (-sign * n, sign * n)]


def diag_images(z1, z2):
    return {"x1": np.diag([z1, 1 / z1]), "x2": np.diag([z2, 1 / z2]),
            "mu": np.array([[0, 1], [-1, 0]], dtype=complex)}


def sym_power(a, n):
    """sigma_n(a) numerically: columns are coefficients of (p x + q y)^(n-1-j) (r x + s y)^j."""
    (p, q), (r, s) = np.linalg.inv(a)
    k = n - 1
    out = np.zeros((n, n), dtype=complex)
    for j in range(n):
        # coefficients in powers of y, x implicit
        col = np.array([1.0 + 0j])
        for _ in range(k - j):
            col = np.convolve(col, [p, q])
        for _ in range(j):
            col = np.convolve(col, [r, s])
        out[:, j] = col
    return out


LIN_DEGREES = {"x1": 0, "x2": 0, "mu": 1}
