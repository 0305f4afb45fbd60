"""
Limits of log Delta_{K, rho_2N}(t) / 2N and of the torsion analogue, built
from one period of the block representations psi_1, ..., psi_p.
"""

import math
from dataclasses import dataclass

from .fpgroup import abelianization
from .rep import block_decomposition, metabelian_rep, period
from .tap import TorsionUndefined, product_result, torsion_from_result, twisted_alexander


@dataclass(frozen=True)
class LimitExpression:
    """t -> (1 / 2p) log(product(t)), kept symbolic."""

    period: int
    product: object

    def log_modulus(self, t0):
        return math.log(abs(self.product.eval_numeric(t0))) / (2 * self.period)


@dataclass(frozen=True)
class ConvergenceRow:
    N: int
    finite_value: float
    limit_value: float
    gap: float


def period_blocks(presentation, data, alpha=None):
    """TapResults of psi_1..psi_p, p the period of the data."""
    if alpha is None:
        alpha = abelianization(presentation)
    metabelian_rep(presentation, data)
    p = period(data)
    return [twisted_alexander(presentation, psi, alpha, check=False)
            for psi in block_decomposition(data, presentation, p)]


def tap_limit(presentation, data, alpha=None, blocks=None):
    """LimitExpression with the exact product of one period of block values."""
    blocks = blocks or period_blocks(presentation, data, alpha)
    return LimitExpression(len(blocks), product_result(blocks).value)


def block_torsions(blocks):
    """Exact Delta_{psi_j}(1) for each block; TorsionUndefined if one vanishes."""
    out = []
    for j, b in enumerate(blocks, start=1):
        try:
            out.append(torsion_from_result(b))
        except TorsionUndefined as exc:
            raise TorsionUndefined("block psi_%d: %s" % (j, exc)) from None
    return out


def torsion_limit(presentation, data, alpha=None, blocks=None):
    """(1/2p) sum_j log |Delta_{psi_j}(1)|."""
    blocks = blocks or period_blocks(presentation, data, alpha)
    logs = [math.log(v.modulus) for v in block_torsions(blocks)]
    return math.fsum(logs) / (2 * len(blocks))


def _block_logs(blocks, t0):
    logs = []
    for j, b in enumerate(blocks, start=1):
        try:
            v = b.value.eval_numeric(t0)
        except ZeroDivisionError:
            raise ZeroDivisionError("t0 = %r is a pole of block psi_%d" % (t0, j)) from None
        if v == 0:
            raise ZeroDivisionError("block psi_%d vanishes at t0 = %r" % (j, t0))
        logs.append(math.log(abs(v)))
    return logs


def convergence_table(presentation, data, alpha=None, n_max=30, t0=1.0, blocks=None):
    """
    Rows N = 1..n_max of log|Delta_{rho_2N}(t0)| / 2N against the limit.

    Block values repeat with period p, so with N = kp + r the finite value
    is (kp/N) * limit + (sum of the first r block logs) / 2N.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    blocks = blocks or period_blocks(presentation, data, alpha)
    logs = _block_logs(blocks, t0)
    p = len(logs)
    limit = math.fsum(logs) / (2 * p)
    rows = []
    for N in range(1, n_max + 1):
        k, r = divmod(N, p)
        finite = (k * p / N) * limit + math.fsum(logs[:r]) / (2 * N)
        rows.append(ConvergenceRow(N, finite, limit, abs(finite - limit)))
    return rows


def direct_log_modulus(presentation, data, N, t0, alpha=None):
    """log|Delta_{rho_2N}(t0)| summed block by block for N blocks (no periodic shortcut)."""
    if alpha is None:
        alpha = abelianization(presentation)
    blocks = [twisted_alexander(presentation, psi, alpha, check=False)
              for psi in block_decomposition(data, presentation, N)]
    return math.fsum(_block_logs(blocks, t0))
