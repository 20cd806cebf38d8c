"""SU(2), SO(3), the double-cover spinor map, and the quotients S², ℝP².

Conventions used throughout the package:

* an SU(2) element is the tuple (z0, z1) representing the matrix
      [[ z0,  conj(z1)],
       [-z1,  conj(z0)]],
  so the group product is (a, b)·(z0, z1) = (a z0 - conj(b) z1, b z0 + conj(a) z1);
* u(ψ, n̂) = cos(ψ/2)·Id - i·sin(ψ/2)·(n̂·σ) is the axis-angle element, and the
  spinor map Spin sends u(ψ, n̂) to the right-handed active rotation R(ψ, n̂)
  through g (x·σ) g† = (Spin(g) x)·σ;
* S² ≅ SU(2)/U(1) with base point e₃ = (0, 0, 1): x(g) := Spin(g)·e₃;
* ℝP² ≅ SU(2)/H where H consists of the diagonal elements diag(λ, conj(λ))
  and the antidiagonal elements [[0, conj(λ)], [-λ, 0]] with |λ| = 1.

Projective points carry a canonical sign: the representative is flipped so
that the last coordinate that is nonzero at tolerance 1e-12, scanning
(x₃, x₂, x₁), is positive.
"""

from dataclasses import dataclass

import numpy as np

UNIT_TOL = 1e-9          # constructor tolerance for unit-norm inputs
ZERO_TOL = 1e-12         # coordinate treated as zero during canonicalization
H_CLASSIFY_TOL = 1e-10   # tolerance on the vanishing entry for H membership

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


@dataclass(frozen=True)
class SU2Element:
    """Unit pair (z0, z1); normalized on construction."""

    z0: complex
    z1: complex

    def __post_init__(self):
        n = abs(self.z0) ** 2 + abs(self.z1) ** 2
        if abs(n - 1.0) > UNIT_TOL:
            raise ValueError(f"(z0, z1) norm {n} departs from 1 beyond {UNIT_TOL}")
        s = 1.0 / np.sqrt(n)
        object.__setattr__(self, "z0", complex(self.z0) * s)
        object.__setattr__(self, "z1", complex(self.z1) * s)

    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.z0, np.conj(self.z1)], [-self.z1, np.conj(self.z0)]],
            dtype=complex,
        )

    def inverse(self) -> "SU2Element":
        return SU2Element(np.conj(self.z0), -self.z1)

    def __mul__(self, other: "SU2Element") -> "SU2Element":
        a, b = self.z0, self.z1
        return SU2Element(
            a * other.z0 - np.conj(b) * other.z1,
            b * other.z0 + np.conj(a) * other.z1,
        )

    def __neg__(self) -> "SU2Element":
        return SU2Element(-self.z0, -self.z1)


SU2_IDENTITY = SU2Element(1.0, 0.0)


@dataclass(frozen=True)
class HElement:
    """Element of the stabilizer subgroup H, tagged by its component."""

    kind: str        # "diagonal" | "antidiagonal"
    lam: complex     # unimodular parameter

    def __post_init__(self):
        if self.kind not in ("diagonal", "antidiagonal"):
            raise ValueError(f"unknown H component {self.kind!r}")
        if abs(abs(self.lam) - 1.0) > UNIT_TOL:
            raise ValueError("lambda must be unimodular")
        object.__setattr__(self, "lam", complex(self.lam) / abs(self.lam))

    def embed(self) -> SU2Element:
        """The SU(2) element this H element embeds as."""
        if self.kind == "diagonal":
            return SU2Element(self.lam, 0.0)
        return SU2Element(0.0, self.lam)


def su2_from_axis_angle(psi: float, n_hat) -> SU2Element:
    """u(ψ, n̂) = cos(ψ/2)·Id - i·sin(ψ/2)·(n̂·σ) as a tuple (z0, z1)."""
    n = np.asarray(n_hat, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > UNIT_TOL:
        raise ValueError("axis must be a unit vector")
    c, s = np.cos(psi / 2.0), np.sin(psi / 2.0)
    return SU2Element(c - 1j * s * n[2], s * (-n[1] + 1j * n[0]))


def random_su2(rng: np.random.Generator) -> SU2Element:
    """Haar-uniform SU(2) element via a random unit 4-vector."""
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return SU2Element(v[0] + 1j * v[1], v[2] + 1j * v[3])


def spinor_map(g: SU2Element) -> np.ndarray:
    """The 2:1 homomorphism SU(2) → SO(3).

    Returns the matrix R with R_ij = ½ tr(σ_i g σ_j g†), i.e. the unique
    rotation with g (x·σ) g† = (R x)·σ for all x ∈ ℝ³.
    """
    u = g.matrix()
    ud = u.conj().T
    r = np.empty((3, 3))
    for j in range(3):
        m = u @ PAULI[j] @ ud
        for i in range(3):
            r[i, j] = 0.5 * np.trace(PAULI[i] @ m).real
    return r


def skew_matrix(n) -> np.ndarray:
    """N with N v = n × v."""
    x, y, z = np.asarray(n, dtype=float)
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def rotation_from_axis_angle(psi: float, n_hat) -> np.ndarray:
    """Rodrigues form R(ψ, n̂) = Id + sin(ψ)·N + (1 - cos(ψ))·N²."""
    n = np.asarray(n_hat, dtype=float)
    if abs(np.linalg.norm(n) - 1.0) > UNIT_TOL:
        raise ValueError("axis must be a unit vector")
    nmat = skew_matrix(n)
    return np.eye(3) + np.sin(psi) * nmat + (1.0 - np.cos(psi)) * (nmat @ nmat)


def h_membership(g: SU2Element) -> HElement | None:
    """Classify g as diagonal/antidiagonal H element, or None if outside H."""
    if abs(g.z1) <= H_CLASSIFY_TOL:
        return HElement("diagonal", g.z0)
    if abs(g.z0) <= H_CLASSIFY_TOL:
        return HElement("antidiagonal", g.z1)
    return None


def h_orbit_action(g: SU2Element, h: HElement) -> SU2Element:
    """Right action g ↦ g·h generating the H orbits on SU(2).

    Componentwise: diagonal λ sends (α, β) to (αλ, βλ); antidiagonal λ sends
    (α, β) to (-conj(β)λ, conj(α)λ).
    """
    return g * h.embed()


def unit_vector(x) -> np.ndarray:
    """Validate and renormalize a unit 3-vector (tolerance 1e-9).

    Vectors already unit to 1e-14 are passed through unchanged, which keeps
    canonicalization bitwise idempotent.
    """
    v = np.asarray(x, dtype=float)
    n = np.linalg.norm(v)
    if abs(n - 1.0) > UNIT_TOL:
        raise ValueError(f"|x| = {n} departs from 1 beyond {UNIT_TOL}")
    if abs(n - 1.0) > 1e-14:
        return v / n
    return v.copy()


def canonical_sign(x) -> float:
    """Sign flip making the last nonzero coordinate of (x₃, x₂, x₁) positive."""
    v = np.asarray(x, dtype=float)
    for i in (2, 1, 0):
        if abs(v[i]) >= ZERO_TOL:
            return 1.0 if v[i] > 0.0 else -1.0
    return 1.0


@dataclass(frozen=True)
class RP2Point:
    """Point of ℝP² stored through its canonical unit representative."""

    rep: np.ndarray

    def __post_init__(self):
        # adding 0.0 maps any -0.0 entries to +0.0 so byte-level hashing agrees
        v = unit_vector(self.rep) * canonical_sign(self.rep) + 0.0
        v.flags.writeable = False
        object.__setattr__(self, "rep", v)

    def __eq__(self, other) -> bool:
        return isinstance(other, RP2Point) and np.array_equal(self.rep, other.rep)

    def __hash__(self):
        return hash(self.rep.tobytes())


def rp2_point(x) -> RP2Point:
    """Class [x] of a unit 3-vector (antipodal points identify)."""
    return RP2Point(np.asarray(x, dtype=float))


def quotient_to_sphere(g: SU2Element) -> np.ndarray:
    """x(g) = Spin(g)·e₃, the S² point of the class g·U(1)."""
    return spinor_map(g)[:, 2].copy()


def quotient_to_rp2(g: SU2Element) -> RP2Point:
    """[x(g)], the ℝP² point of the class g·H."""
    return rp2_point(quotient_to_sphere(g))


def su2_from_sphere_point(x) -> SU2Element:
    """A section of SU(2) → S²: the geodesic rotation taking e₃ to x.

    Deterministic choice used when a concrete class representative is needed;
    at the south pole the π-rotation about e₁ is returned.
    """
    v = unit_vector(x)
    if v[2] <= -1.0 + ZERO_TOL:
        return su2_from_axis_angle(np.pi, (1.0, 0.0, 0.0))
    axis = np.array([-v[1], v[0], 0.0])
    s = np.linalg.norm(axis)
    if s < ZERO_TOL:
        return SU2_IDENTITY
    return su2_from_axis_angle(np.arctan2(s, v[2]), axis / s)
