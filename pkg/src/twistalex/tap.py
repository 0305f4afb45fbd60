"""
Twisted Alexander polynomials (Wada's invariant) from Fox calculus, and
the Reidemeister torsion obtained by setting t = 1.
"""

from dataclasses import dataclass

from .algebra import (CyclotomicNumber, LaurentPolynomial, PolyMatrix, RationalFunction,
                      determinant, mat_det, mat_identity, mat_sub)
from .fpgroup import GroupRingElement, Word, abelianization, fox_derivative
from .rep import (RepresentationError, block_decomposition, metabelian_data_from_rep,
                  require_valid, sym_power)


class TapUndefined(ValueError):
    """No generator g with det Phi(g - 1) != 0, or the requested one fails."""


class TorsionUndefined(ValueError):
    """The Fox-calculus torsion expression vanishes or has a zero denominator at t = 1."""


@dataclass(frozen=True)
class TapResult:
    value: RationalFunction
    numerator_raw: LaurentPolynomial
    denominator_raw: LaurentPolynomial
    column: str
    dim: int

    def is_laurent(self):
        return self.value.is_laurent()


@dataclass(frozen=True)
class TorsionValue:
    """Delta(1) computed exactly, defined only up to sign."""

    exact: CyclotomicNumber
    modulus: float
    up_to_sign: bool = True


def phi_map(element, rho, alpha):
    """
    Sum a_w t^alpha(w) rho(w) over the terms of a group ring element, as
    an n x n Laurent polynomial matrix.
    """
    if isinstance(element, Word):
        element = GroupRingElement.of(element)
    n, q = rho.dim, rho.order
    acc = [[{} for _ in range(n)] for _ in range(n)]
    for w, a in element.terms.items():
        deg = alpha.degree(w)
        m = rho.image(w)
        for i in range(n):
            for j in range(n):
                x = m[i][j]
                if x:
                    cell = acc[i][j]
                    cell[deg] = cell.get(deg, 0) + a * x
    return PolyMatrix([[LaurentPolynomial.from_dict(cell, q) for cell in row] for row in acc])


def fox_jacobian(presentation, rho, alpha, column):
    """The block matrix Phi(d r_i / d g_j), rows by relator, generator ``column`` removed."""
    gens = [g for g in presentation.generators if g != column]
    blocks = [[phi_map(fox_derivative(r, g), rho, alpha) for g in gens]
              for r in presentation.relators]
    return PolyMatrix.from_blocks(blocks)


def _denominator(rho, alpha, g):
    return determinant(phi_map(GroupRingElement.of(Word.generator(g)) - 1, rho, alpha))


def _default_columns(presentation):
    order = list(presentation.generators)
    if presentation.meridian is not None:
        order.remove(presentation.meridian)
        order.insert(0, presentation.meridian)
    return order


def twisted_alexander(presentation, rho, alpha=None, column=None, check=True):
    """
    Delta_{K,rho}(t) = det Phi(d r_i/d g_j)_{j != l} / det Phi(g_l - 1).

    Without an explicit ``column`` the meridian is tried first, then the
    generators in order; the first with nonzero denominator is used.
    """
    presentation.require_deficiency_one()
    if alpha is None:
        alpha = abelianization(presentation)
    if check:
        require_valid(rho, presentation)
    if column is not None:
        if column not in presentation.generators:
            raise TapUndefined("unknown generator %s" % column)
        candidates = [column]
    else:
        candidates = _default_columns(presentation)
    for g in candidates:
        den = _denominator(rho, alpha, g)
        if not den.is_zero():
            break
    else:
        raise TapUndefined("det Phi(g - 1) = 0 for %s" % ", ".join(candidates))
    if len(presentation.generators) == 1:
        num = LaurentPolynomial.constant(1, rho.order)
    else:
        num = determinant(fox_jacobian(presentation, rho, alpha, g))
    return TapResult(RationalFunction(num, den), num, den, g, rho.dim)


def product_result(results, dim=None):
    """Combine TapResults of summands into the result for their direct sum."""
    num = results[0].numerator_raw
    den = results[0].denominator_raw
    value = results[0].value
    for r in results[1:]:
        num = num * r.numerator_raw
        den = den * r.denominator_raw
        value = value * r.value
    return TapResult(value, num, den, results[0].column,
                     dim if dim is not None else sum(r.dim for r in results))


def tap_higher(presentation, rho, alpha=None, n=2, strategy="direct", column=None):
    """
    The n-dimensional twisted Alexander polynomial for a 2-dimensional rho.

    ``direct`` runs the Fox calculus on sigma_n(rho).  ``blocks`` (even n,
    rho in metabelian normal form) multiplies the values of psi_1..psi_(n/2).
    """
    if alpha is None:
        alpha = abelianization(presentation)
    if strategy == "direct":
        return twisted_alexander(presentation, sym_power(rho, n), alpha, column)
    if strategy != "blocks":
        raise ValueError("unknown strategy %r" % (strategy,))
    if n % 2:
        raise RepresentationError("the block strategy needs an even dimension, got %d" % n)
    data = metabelian_data_from_rep(rho, presentation)
    cache = {}
    results = []
    for psi in block_decomposition(data, presentation, n // 2):
        key = psi.key()
        if key not in cache:
            cache[key] = twisted_alexander(presentation, psi, alpha, column, check=False)
        results.append(cache[key])
    return product_result(results, n)


def wada_criterion(presentation, rho, gamma, alpha=None):
    """
    True iff rho(gamma) has no eigenvalue 1, for gamma of abelianization
    degree 0; then Delta_{K,rho} is a Laurent polynomial.
    """
    if alpha is None:
        alpha = abelianization(presentation)
    if alpha.degree(gamma) != 0:
        raise ValueError("%s has nonzero abelianization degree" % gamma)
    m = rho.image(gamma)
    return not mat_det(mat_sub(m, mat_identity(rho.dim, rho.order))).is_zero()


def torsion_from_result(result):
    den = result.denominator_raw.evaluate(1)
    if den.is_zero():
        raise TorsionUndefined("det rho(%s - 1) = 0" % result.column)
    num = result.numerator_raw.evaluate(1)
    if num.is_zero():
        raise TorsionUndefined("Fox Jacobian is singular at t = 1 (non-acyclic)")
    exact = num / den
    return TorsionValue(exact, abs(exact.to_complex()))


def reidemeister_torsion(presentation, rho, alpha=None, column=None):
    """Delta_{K,rho}(1) with numerator and denominator evaluated before dividing."""
    return torsion_from_result(twisted_alexander(presentation, rho, alpha, column))


__all__ = [
    "TapResult", "TapUndefined", "TorsionUndefined", "TorsionValue", "fox_jacobian", "phi_map",
    "product_result", "reidemeister_torsion", "tap_higher", "torsion_from_result",
    "twisted_alexander", "wada_criterion",
]
