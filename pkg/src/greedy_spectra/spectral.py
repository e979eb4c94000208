"""Eigenvalues, Estrada index, power-series functionals, characteristic polynomial.

The eigensolver is a plain cyclic Jacobi sweep written here on purpose: the
off-diagonal Frobenius norm bounds every eigenvalue error, which gives a
clean certified stopping rule, and the fixed sweep order keeps results
deterministic.  numpy supplies the array storage and rotations only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    InvalidBoundsError,
    MethodDisagreementError,
    NonConvergenceError,
)
from .trees import Tree
from .walks import spectral_moments_up_to

__all__ = [
    "Spectrum",
    "PowerSeriesFunctional",
    "eigenvalues",
    "estrada_index",
    "evaluate_functional",
    "spectral_radius",
    "characteristic_polynomial",
    "evaluate_char_poly",
]

_MAX_POWER_ITERATIONS = 10 ** 6
_MAX_JACOBI_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues in non-increasing order, with the tolerance used."""

    values: tuple[float, ...]
    tol: float

    @property
    def radius(self) -> float:
        return self.values[0]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]


def _adjacency_matrix(t: Tree) -> np.ndarray:
    a = np.zeros((t.n, t.n))
    for u, v in t.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def _off_norm(a: np.ndarray) -> float:
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.sqrt(np.sum(a[mask] ** 2)))


def eigenvalues(t: Tree, tol: float = 1e-10) -> Spectrum:
    """All adjacency eigenvalues, each within ``tol`` of the true value.

    Cyclic Jacobi: rotate away each off-diagonal entry in a fixed order
    until the off-diagonal Frobenius norm drops below ``tol``; by Weyl's
    inequality the diagonal then carries every eigenvalue to within ``tol``.
    """
    if tol <= 0:
        raise InvalidBoundsError(f"tolerance must be positive, got {tol}")
    n = t.n
    a = _adjacency_matrix(t)
    if n == 1:
        return Spectrum((0.0,), tol)
    for _ in range(_MAX_JACOBI_SWEEPS):
        if _off_norm(a) <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    tangent = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    tangent = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(tangent * tangent + 1.0)
                s = tangent * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - tangent * apq
                a[q, q] = aqq + tangent * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise NonConvergenceError(
            f"Jacobi sweep cap {_MAX_JACOBI_SWEEPS} hit at off-norm {_off_norm(a):.3e}"
        )
    values = tuple(sorted((float(x) for x in np.diag(a)), reverse=True))
    return Spectrum(values, tol)


def spectral_radius(t: Tree, tol: float = 1e-10) -> float:
    """Largest adjacency eigenvalue by power iteration, within ``tol``.

    Trees are bipartite, so the spectrum is symmetric and iterating with the
    adjacency matrix itself oscillates between the +rho and -rho directions.
    Iterating with A + I instead (primitive for connected graphs) converges
    from the all-ones vector, and the Rayleigh quotient minus one estimates
    rho with error bounded by the residual norm.
    """
    if tol <= 0:
        raise InvalidBoundsError(f"tolerance must be positive, got {tol}")
    if t.n == 1:
        return 0.0
    a = _adjacency_matrix(t)
    x = np.ones(t.n) / math.sqrt(t.n)
    for _ in range(_MAX_POWER_ITERATIONS):
        y = a @ x + x
        theta = float(x @ y)
        residual = float(np.linalg.norm(y - theta * x))
        if residual <= tol:
            return theta - 1.0
        x = y / float(np.linalg.norm(y))
    raise NonConvergenceError(
        f"power iteration cap {_MAX_POWER_ITERATIONS} hit at residual {residual:.3e}"
    )


def _series_order(n: int, degree_bound: int, tol: float) -> int:
    """Smallest K whose exp-series tail past K is provably below ``tol``.

    The spectral radius is at most the maximum degree D, so the tail
    sum_{k>K} M_k/k! is at most n * D^(K+1)/(K+1)! * e^D.
    """
    if degree_bound <= 0:
        return 0
    log_tol = math.log(tol)
    k = 0
    while True:
        log_tail = (
            math.log(n)
            + (k + 1) * math.log(degree_bound)
            + degree_bound
            - math.lgamma(k + 2)
        )
        if log_tail < log_tol:
            return k
        k += 1


def estrada_index(t: Tree, tol: float = 1e-8) -> float:
    """Sum of e^lambda over the adjacency spectrum, cross-checked two ways.

    Route one exponentiates the Jacobi eigenvalues; route two sums the
    truncated series sum_k M_k/k! with exact integer moments and a tail
    bound below ``tol``.  If the routes disagree by more than 10*tol the
    computation refuses to pick one.
    """
    if tol <= 0:
        raise InvalidBoundsError(f"tolerance must be positive, got {tol}")
    spec = eigenvalues(t, min(1e-12, tol))
    by_eigen = math.fsum(math.exp(v) for v in spec.values)
    order = _series_order(t.n, max(t.degrees) if t.n > 1 else 0, tol)
    moments = spectral_moments_up_to(t, order)
    acc = Fraction(0)
    fact = 1
    for k in range(order + 1):
        if k > 0:
            fact *= k
        acc += Fraction(moments[k], fact)
    by_series = float(acc)
    if abs(by_eigen - by_series) > 10.0 * tol:
        raise MethodDisagreementError(
            f"Estrada index routes disagree: {by_eigen!r} (eigenvalues) vs "
            f"{by_series!r} (series through K={order})"
        )
    return by_eigen


@dataclass(frozen=True)
class PowerSeriesFunctional:
    """Truncated power series f(x) = sum a_k x^k applied to the spectrum.

    With ``nonneg_even`` set, coefficients of even powers must be
    non-negative; that is the class whose spectral sum is maximized by the
    same trees that maximize every even moment.
    """

    coefficients: tuple[float, ...]
    nonneg_even: bool = False

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise InvalidBoundsError("a functional needs at least one coefficient")
        if self.nonneg_even and any(c < 0 for c in coeffs[::2]):
            raise InvalidBoundsError(
                "nonneg_even functionals cannot have negative even coefficients"
            )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def exp_truncated(cls, order: int) -> "PowerSeriesFunctional":
        """The exponential series cut after x^order."""
        if order < 0:
            raise InvalidBoundsError(f"order must be >= 0, got {order}")
        return cls(
            tuple(float(Fraction(1, math.factorial(k))) for k in range(order + 1)),
            nonneg_even=True,
        )


def evaluate_functional(t: Tree, f: PowerSeriesFunctional) -> float:
    """sum_i f(lambda_i) computed as sum_k a_k M_k with exact moments."""
    moments = spectral_moments_up_to(t, f.order)
    acc = Fraction(0)
    for k, coef in enumerate(f.coefficients):
        if coef != 0.0:
            acc += Fraction(coef) * moments[k]
    return float(acc)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def characteristic_polynomial(t: Tree) -> tuple[int, ...]:
    """Coefficients of det(xI - A), constant term first, exact integers.

    Uses the rooted two-polynomial recurrence: for a vertex v with children
    c_1..c_d, with p the polynomial of the subtree at v and q the product of
    the children's p's,

        p_v = x * prod p_ci - sum_i q_ci * prod_{j != i} p_cj,
        q_v = prod p_ci.

    A leaf has p = x, q = 1.  The root's p is the characteristic polynomial.
    """
    root = t.root_vertex if t.root_vertex is not None else 0
    parent = {root: -1}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for u in t.adjacency[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    p: dict[int, list[int]] = {}
    q: dict[int, list[int]] = {}
    for v in reversed(order):
        kids = [u for u in t.adjacency[v] if u != parent[v]]
        if not kids:
            p[v] = [0, 1]
            q[v] = [1]
            continue
        polys = [p[u] for u in kids]
        prefix = [[1]]
        for poly in polys:
            prefix.append(_poly_mul(prefix[-1], poly))
        suffix = [[1]]
        for poly in reversed(polys):
            suffix.append(_poly_mul(suffix[-1], poly))
        suffix.reverse()
        full = prefix[-1]
        pv = [0] + full  # times x
        for idx, u in enumerate(kids):
            term = _poly_mul(q[u], _poly_mul(prefix[idx], suffix[idx + 1]))
            for j, coef in enumerate(term):
                pv[j] -= coef
        p[v] = pv
        q[v] = full
    return tuple(p[root])


def evaluate_char_poly(coefficients: Sequence[int], x: float) -> float:
    """Horner evaluation of a constant-first coefficient list."""
    acc = 0.0
    for coef in reversed(tuple(coefficients)):
        acc = acc * x + coef
    return acc
