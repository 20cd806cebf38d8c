"""Classical side: the observable map P on T*W and its bracket homomorphism.

The phase space is T*W ≅ W × W* with W the symmetric traceless 3×3 matrices.
A semidirect Lie-algebra element à = (φ, A) pairs a functional φ ∈ W* with a
rotation generator A ∈ ℝ³ acting infinitesimally by R(A)u = [Â, u], Â the
skew matrix of A.  The observable map is

    P(Ã)(u, ψ) = ψ([Â, u]) + φ(u),

and with the canonical bracket normalized by {u_i, ψ_j} = δ_ij (configuration
u, momentum ψ) one computes in closed form

    {P(e₁), P(e₂)}(u, ψ) = ψ([[Â₁, Â₂], u]) + φ₁([Â₂, u]) - φ₂([Â₁, u]),

which is again P of the semidirect bracket

    [(φ₁, A₁), (φ₂, A₂)] = (φ₁∘R(A₂) - φ₂∘R(A₁), A₁ × A₂).

This sign convention is the unique one of the two candidates under which the
bracket homomorphism holds with {q, p} = +1; the identity holding without any
central correction is the no-obstruction statement verified here.
"""

from dataclasses import dataclass

import numpy as np

from .groups import skew_matrix
from .manifold import WFunctional, check_symmetric_traceless

_SQ2 = np.sqrt(2.0)
_SQ6 = np.sqrt(6.0)

# orthonormal basis of W under <X, Y> = tr(XY)
W_BASIS = np.array(
    [
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [[1, 0, 0], [0, 1, 0], [0, 0, -2]],
    ],
    dtype=float,
)
W_BASIS[0:3] /= _SQ2
W_BASIS[3] /= _SQ2
W_BASIS[4] /= _SQ6
W_BASIS.flags.writeable = False


def w_coords(m: np.ndarray) -> np.ndarray:
    """Coordinates of a symmetric traceless matrix in the orthonormal basis."""
    return np.einsum("kij,ji->k", W_BASIS, m)


def w_matrix(coords: np.ndarray) -> np.ndarray:
    return np.einsum("k,kij->ij", coords, W_BASIS)


@dataclass(frozen=True)
class PhasePoint:
    """Point (u, ψ) of W × W*; u need not lie on the projective orbit."""

    u: np.ndarray
    psi: WFunctional

    def __post_init__(self):
        object.__setattr__(self, "u", check_symmetric_traceless(self.u))
        if self.psi.c0 != 0.0:
            raise ValueError("momentum functional must have zero offset")


@dataclass(frozen=True)
class SemidirectLieElement:
    """Pair (φ, A): functional part plus rotation generator."""

    phi_w: WFunctional
    A: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "A", np.asarray(self.A, dtype=float))


def infinitesimal_action(A, u: np.ndarray) -> np.ndarray:
    """R(A)u = [Â, u], the derivative of R·u·Rᵀ along the rotation A."""
    ahat = skew_matrix(A)
    return ahat @ u - u @ ahat


def P_observable(e: SemidirectLieElement, pt: PhasePoint) -> float:
    """P(Ã)(u, ψ) = ψ([Â, u]) + φ(u), trace pairings throughout."""
    moved = infinitesimal_action(e.A, pt.u)
    return float(np.trace(pt.psi.c @ moved) + np.trace(e.phi_w.c @ pt.u) + e.phi_w.c0)


def lie_bracket(
    e1: SemidirectLieElement, e2: SemidirectLieElement
) -> SemidirectLieElement:
    """[(φ₁, A₁), (φ₂, A₂)] = (φ₁∘R(A₂) - φ₂∘R(A₁), A₁ × A₂)."""
    a1h, a2h = skew_matrix(e1.A), skew_matrix(e2.A)
    # coefficient matrix of u ↦ tr(c [Â, u]) is [c, Â]
    c = (e1.phi_w.c @ a2h - a2h @ e1.phi_w.c) - (e2.phi_w.c @ a1h - a1h @ e2.phi_w.c)
    return SemidirectLieElement(WFunctional(c, 0.0), np.cross(e1.A, e2.A))


def poisson_bracket(
    e1: SemidirectLieElement, e2: SemidirectLieElement, pt: PhasePoint
) -> float:
    """Canonical bracket {P(e₁), P(e₂)} at pt, in closed form."""
    a1h, a2h = skew_matrix(e1.A), skew_matrix(e2.A)
    comm = a1h @ a2h - a2h @ a1h
    val = np.trace(pt.psi.c @ (comm @ pt.u - pt.u @ comm))
    val += np.trace(e1.phi_w.c @ infinitesimal_action(e2.A, pt.u))
    val -= np.trace(e2.phi_w.c @ infinitesimal_action(e1.A, pt.u))
    return float(val)


def poisson_bracket_fd(
    e1: SemidirectLieElement,
    e2: SemidirectLieElement,
    pt: PhasePoint,
    step: float = 1e-5,
) -> float:
    """Finite-difference bracket Σ_k (∂F/∂u_k ∂G/∂ψ_k - ∂F/∂ψ_k ∂G/∂u_k)."""

    def observable(e, uc, pc):
        p = PhasePoint(w_matrix(uc), WFunctional(w_matrix(pc), 0.0))
        return P_observable(e, p)

    uc0, pc0 = w_coords(pt.u), w_coords(pt.psi.c)
    total = 0.0
    for k in range(5):
        du = np.zeros(5)
        du[k] = step
        dfu = (observable(e1, uc0 + du, pc0) - observable(e1, uc0 - du, pc0)) / (2 * step)
        dgu = (observable(e2, uc0 + du, pc0) - observable(e2, uc0 - du, pc0)) / (2 * step)
        dfp = (observable(e1, uc0, pc0 + du) - observable(e1, uc0, pc0 - du)) / (2 * step)
        dgp = (observable(e2, uc0, pc0 + du) - observable(e2, uc0, pc0 - du)) / (2 * step)
        total += dfu * dgp - dfp * dgu
    return total


def check_homomorphism(
    e1: SemidirectLieElement,
    e2: SemidirectLieElement,
    sample_points: list[PhasePoint],
) -> float:
    """max |{P(e₁), P(e₂)}(pt) - P([e₁, e₂])(pt)| over the samples.

    Vectorized over the sample batch; identical pointwise to
    poisson_bracket(e1, e2, pt) - P_observable(lie_bracket(e1, e2), pt).
    """
    br = lie_bracket(e1, e2)
    us = np.stack([pt.u for pt in sample_points])
    psis = np.stack([pt.psi.c for pt in sample_points])
    a1h, a2h = skew_matrix(e1.A), skew_matrix(e2.A)
    comm = a1h @ a2h - a2h @ a1h

    def tr_action(c, ahat):
        moved = np.einsum("ij,njk->nik", ahat, us) - np.einsum("nij,jk->nik", us, ahat)
        return np.einsum("ij,nji->n", c, moved)

    # bracket value: tr(ψ [comm, u]) + tr(c₁ [Â₂, u]) - tr(c₂ [Â₁, u])
    moved_comm = np.einsum("ij,njk->nik", comm, us) - np.einsum("nij,jk->nik", us, comm)
    lhs = np.einsum("nij,nji->n", psis, moved_comm)
    lhs += tr_action(e1.phi_w.c, a2h) - tr_action(e2.phi_w.c, a1h)

    bhat = skew_matrix(br.A)
    moved_b = np.einsum("ij,njk->nik", bhat, us) - np.einsum("nij,jk->nik", us, bhat)
    rhs = np.einsum("nij,nji->n", psis, moved_b)
    rhs += np.einsum("ij,nji->n", br.phi_w.c, us) + br.phi_w.c0
    return float(np.max(np.abs(lhs - rhs)))


def random_element(rng: np.random.Generator, scale: float = 1.0) -> SemidirectLieElement:
    c = w_matrix(rng.normal(size=5) * scale)
    return SemidirectLieElement(WFunctional(c, 0.0), rng.normal(size=3) * scale)


def random_phase_point(rng: np.random.Generator, scale: float = 1.0) -> PhasePoint:
    return PhasePoint(
        w_matrix(rng.normal(size=5) * scale),
        WFunctional(w_matrix(rng.normal(size=5) * scale), 0.0),
    )
