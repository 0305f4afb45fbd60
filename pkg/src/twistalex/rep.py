"""
Matrix representations of presented groups over cyclotomic fields.

Besides the generic :class:`Representation`, this module builds the
normal form of an irreducible metabelian SL(2) representation on a Lin
presentation, its symmetric powers, and the 2x2 blocks psi_j into which
the even symmetric powers split.
"""

import math
from dataclasses import dataclass, field

from .algebra import (CyclotomicNumber, block_diagonal, mat_det, mat_from_rows, mat_identity,
                      mat_inverse, mat_is_identity, mat_mul, mat_order, mat_pow,
                      root_of_unity_order)


class RepresentationError(ValueError):
    """Images that do not define a representation (singular, or a relator fails)."""


def _binomial_row(k, x, y):
    """Coefficients of (x*X + y*Y)^k on X^(k-s) Y^s, s = 0..k."""
    return [math.comb(k, s) * x ** (k - s) * y ** s for s in range(k + 1)]


class Representation:
    """
    Generator images in GL(dim, Q(zeta_order)).

    ``images`` maps generator names to square matrices (tuples of tuples of
    CyclotomicNumber).  Every image is checked to be invertible, and ``sl``
    records whether every image has determinant 1.
    """

    def __init__(self, images, order=None):
        q = order or 1
        mats = {}
        for g, m in images.items():
            m = mat_from_rows(m)
            q = math.lcm(q, mat_order(m))
            mats[g] = m
        dims = {len(m) for m in mats.values()}
        if len(dims) != 1:
            raise RepresentationError("images have different sizes %s" % sorted(dims))
        self.dim = dims.pop()
        self.order = q
        self.images = {g: mat_from_rows(m, q) for g, m in mats.items()}
        self.sl = True
        for g, m in self.images.items():
            if any(len(r) != self.dim for r in m):
                raise RepresentationError("image of %s is not square" % g)
            det = mat_det(m)
            if det.is_zero():
                raise RepresentationError("image of %s is singular" % g)
            if det != 1:
                self.sl = False
        self._powers = {}

    @property
    def generators(self):
        return tuple(self.images)

    def _power(self, g, e):
        key = (g, e)
        m = self._powers.get(key)
        if m is None:
            if g not in self.images:
                raise RepresentationError("no image for generator %s" % g)
            m = mat_pow(self.images[g], e)
            self._powers[key] = m
        return m

    def image(self, w):
        """rho(w) for a Word."""
        result = None
        for g, e in w.syllables:
            m = self._power(g, e)
            result = m if result is None else mat_mul(result, m)
        if result is None:
            return mat_identity(self.dim, self.order)
        return result

    def conjugate(self, c):
        """The representation g -> c rho(g) c^-1."""
        c = mat_from_rows(c)
        ci = mat_inverse(c)
        return Representation({g: mat_mul(mat_mul(c, m), ci) for g, m in self.images.items()})

    def embed(self, order):
        return Representation(self.images, order=math.lcm(order, self.order))

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.images.keys() == other.images.keys()
                and all(self.images[g] == other.images[g] for g in self.images))

    __hash__ = None

    def key(self):
        """Hashable value identifying the images."""
        return tuple((g, self.images[g]) for g in sorted(self.images))

    def __repr__(self):
        return "Representation(dim=%d, order=%d, generators=%s)" % (
            self.dim, self.order, list(self.images))


def validate(rho, presentation):
    """The relators of ``presentation`` whose image under rho is not the identity."""
    missing = [g for g in presentation.generators if g not in rho.images]
    if missing:
        raise RepresentationError("no image for generators %s" % ", ".join(missing))
    return [r for r in presentation.relators if not mat_is_identity(rho.image(r))]


def require_valid(rho, presentation):
    failed = validate(rho, presentation)
    if failed:
        raise RepresentationError("relators not satisfied: %s" % "; ".join(str(r) for r in failed))
    return rho


MU_MATRIX = ((0, 1), (-1, 0))


@dataclass(frozen=True)
class MetabelianData:
    """
    Diagonal data z_i for the normal form x_i -> diag(z_i, 1/z_i),
    meridian -> [[0, 1], [-1, 0]].  ``zs`` follow the non-meridian
    generators in presentation order.
    """

    zs: tuple
    meridian: str = "mu"
    orders: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        zs = tuple(z if isinstance(z, CyclotomicNumber) else CyclotomicNumber.rational(z)
                   for z in self.zs)
        object.__setattr__(self, "zs", zs)
        orders = tuple(root_of_unity_order(z) for z in zs)
        for z, k in zip(zs, orders):
            if k % 2 == 0:
                raise RepresentationError("z = %s has even order %d" % (z, k))
        object.__setattr__(self, "orders", orders)

    def power(self, k):
        """The data z_i -> z_i^k."""
        return MetabelianData(tuple(z ** k for z in self.zs), self.meridian)


def _lin_generators(presentation, data):
    if data.meridian not in presentation.generators:
        raise RepresentationError("meridian %s is not a generator" % data.meridian)
    xs = [g for g in presentation.generators if g != data.meridian]
    if len(xs) != len(data.zs):
        raise RepresentationError("%d diagonal values for %d generators"
                                  % (len(data.zs), len(xs)))
    return xs


def _diagonal_rep(presentation, data, exponent, order=None):
    xs = _lin_generators(presentation, data)
    images = {}
    q = order or 1
    for z in data.zs:
        q = math.lcm(q, z.order)
    zero = CyclotomicNumber.rational(0, q)
    for g, z, k in zip(xs, data.zs, data.orders):
        # exponents reduced mod the exact order so no field inversion is needed
        a = z.embed(q) ** (exponent % k)
        b = z.embed(q) ** (-exponent % k)
        images[g] = ((a, zero), (zero, b))
    images[data.meridian] = mat_from_rows(MU_MATRIX, q)
    return Representation({g: images[g] for g in presentation.generators})


def metabelian_rep(presentation, data):
    """The normal-form metabelian representation; RepresentationError if a relator fails."""
    rho = _diagonal_rep(presentation, data, 1)
    require_valid(rho, presentation)
    if not rho.sl:
        raise RepresentationError("metabelian normal form must lie in SL(2)")
    return rho


def sym_power_matrix(a, n):
    """
    The action of a 2x2 matrix on homogeneous polynomials of degree n-1,
    p(x, y) -> p(x', y') with (x', y') = a^-1 (x, y), in the basis
    x^(n-1), x^(n-2) y, ..., y^(n-1).
    """
    (p, q), (r, s) = mat_inverse(a)
    k = n - 1
    zero = CyclotomicNumber.rational(0, mat_order(a))
    cols = []
    for j in range(n):
        # basis x^(k-j) y^j goes to (p x + q y)^(k-j) (r x + s y)^j
        u = _binomial_row(k - j, p, q)
        w = _binomial_row(j, r, s)
        col = [zero] * n
        for i1, c1 in enumerate(u):
            if c1:
                for i2, c2 in enumerate(w):
                    if c2:
                        col[i1 + i2] = col[i1 + i2] + c1 * c2
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def sym_power(rho, n):
    """sigma_n composed with a 2-dimensional representation."""
    if rho.dim != 2:
        raise RepresentationError("symmetric powers need a 2-dimensional representation")
    if n < 1:
        raise ValueError("dimension must be positive")
    out = Representation({g: sym_power_matrix(m, n) for g, m in rho.images.items()},
                         order=rho.order)
    if rho.sl and not out.sl:
        raise RepresentationError("symmetric power left SL")
    return out


def direct_sum(reps):
    reps = list(reps)
    if not reps:
        raise ValueError("empty direct sum")
    gens = reps[0].images.keys()
    for r in reps[1:]:
        if r.images.keys() != gens:
            raise RepresentationError("direct sum of representations on different generators")
    return Representation({g: block_diagonal([r.images[g] for r in reps]) for g in reps[0].images})


def period(data):
    """lcm of the exact orders of the z_i."""
    return math.lcm(1, *data.orders)


def block(data, presentation, j):
    """psi_j: x_i -> diag(z_i^(1-2j), z_i^(2j-1)), meridian -> [[0,1],[-1,0]]."""
    return _diagonal_rep(presentation, data, 1 - 2 * j)


def block_decomposition(data, presentation, count):
    """psi_1, ..., psi_count, each validated on the presentation."""
    return [require_valid(block(data, presentation, j), presentation)
            for j in range(1, count + 1)]


def block_indices(n_half, j):
    """0-based basis positions of the 2-dimensional summand W_j inside V_(2N)."""
    return n_half - j, n_half + j - 1


def conjugacy_check_blocks(data, presentation, count):
    """
    Compare each psi_j with sigma_(2N)(rho) restricted to W_j, with
    N = count: equal on the x_i, and equal up to the sign (-1)^(N-j) on
    the meridian.
    """
    rho = metabelian_rep(presentation, data)
    big = sym_power(rho, 2 * count)
    for j, psi in enumerate(block_decomposition(data, presentation, count), start=1):
        a, b = block_indices(count, j)
        for g in presentation.generators:
            m = big.images[g]
            restricted = ((m[a][a], m[a][b]), (m[b][a], m[b][b]))
            expected = psi.images[g]
            if g == data.meridian and (count - j) % 2:
                expected = tuple(tuple(-x for x in row) for row in expected)
            if restricted != expected:
                return False
            # W_j must be invariant: no leakage outside the two coordinates
            for i in range(len(m)):
                if i not in (a, b) and (m[i][a] or m[i][b]):
                    return False
    return True


def metabelian_data_from_rep(rho, presentation, meridian=None):
    """
    Recover MetabelianData from a representation already in normal form;
    RepresentationError otherwise.
    """
    meridian = meridian or presentation.meridian or "mu"
    if rho.dim != 2:
        raise RepresentationError("metabelian normal form is 2-dimensional")
    mu = rho.images.get(meridian)
    if mu is None or mu != mat_from_rows(MU_MATRIX, rho.order):
        raise RepresentationError("meridian image is not [[0, 1], [-1, 0]]")
    zs = []
    for g in presentation.generators:
        if g == meridian:
            continue
        (a, b), (c, d) = rho.images[g]
        if b or c or (a * d) != 1:
            raise RepresentationError("image of %s is not diag(z, 1/z)" % g)
        zs.append(a)
    return MetabelianData(tuple(zs), meridian)
