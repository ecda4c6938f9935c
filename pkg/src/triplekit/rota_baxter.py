"""Relative Rota-Baxter operators of weight lambda.

Given an action theta of L on L', a linear map T : L' -> L is a
relative Rota-Baxter operator of weight lambda when

  [Tu,Tv,Tw] = T( D(Tu,Tv)w - theta(Tu,Tw)v + theta(Tv,Tw)u
                  + lambda [u,v,w]' )                       (RB)

for all u, v, w in L'.  Equivalent characterizations implemented here:
the graph {Tu + u} is a subsystem of the semidirect product, and the
block lift (x,u) -> (x + Tu, 0) is a Nijenhuis operator on it.  The
identity (RB) is affine in lambda, so "operator of every weight" is
decided exactly by checking the constant and linear parts separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import (
    Matrix,
    StructureError,
    SubspaceBasis,
    Vector,
    VerificationError,
    ZERO,
    basis_vector,
    invert,
    vec_is_zero,
    vec_sub,
    zero_vector,
)
from .lts import HomomorphismCandidate, LieTripleSystem, derived_algebra, is_abelian_subsystem, is_homomorphism, is_subsystem
from .representations import ActionData, self_action, semidirect_product, verify_action
from .reporting import Report, Violation

# A linear map between based spaces is just its matrix, target rows by
# source columns; T maps L' -> L so T has shape (dim L) x (dim L').
LinearMap = Matrix


@dataclass(frozen=True)
class RelativeRBO:
    action: ActionData
    weight: Fraction
    T: LinearMap

    def __post_init__(self):
        if self.T.cols != self.action.target.dim or self.T.rows != self.action.algebra.dim:
            raise StructureError("operator matrix shape differs from action dimensions")

    @property
    def source(self) -> LieTripleSystem:
        return self.action.target

    @property
    def ambient(self) -> LieTripleSystem:
        return self.action.algebra


def _rbo_defect(action: ActionData, weight: Fraction, T: LinearMap, u: int, v: int, w: int):
    """LHS - RHS of (RB) at basis triple (u, v, w); zero vector iff it holds."""
    L, Lp, rep = action.algebra, action.target, action.rep
    Tu, Tv, Tw = T.column(u), T.column(v), T.column(w)
    eu, ev, ew = (basis_vector(Lp.dim, t) for t in (u, v, w))
    lhs = L.bracket_eval(Tu, Tv, Tw)
    inner = rep.d_vec(Tu, Tv).apply(ew)
    inner = vec_sub(inner, rep.theta_vec(Tu, Tw).apply(ev))
    t = rep.theta_vec(Tv, Tw).apply(eu)
    lam = Lp.bracket[u][v][w]
    inner = tuple(inner[l] + t[l] + weight * lam[l] for l in range(Lp.dim))
    return vec_sub(lhs, T.apply(inner))


def check_rbo(action: ActionData, weight: Fraction, T: LinearMap) -> Report:
    """All basis triples where (RB) fails, in lexicographic order."""
    _check_dims(action, T)
    dp = action.target.dim
    out = []
    for u, v, w in product(range(dp), repeat=3):
        if not vec_is_zero(_rbo_defect(action, weight, T, u, v, w)):
            out.append(Violation("rota-baxter-identity", (u + 1, v + 1, w + 1)))
    return tuple(out)


def is_rbo(action: ActionData, weight: Fraction, T: LinearMap) -> bool:
    """Early-exit variant of :func:`check_rbo` for property sweeps."""
    _check_dims(action, T)
    dp = action.target.dim
    for u, v, w in product(range(dp), repeat=3):
        if not vec_is_zero(_rbo_defect(action, weight, T, u, v, w)):
            return False
    return True


def check_rbo_all_weights(action: ActionData, T: LinearMap) -> Report:
    """Decide "operator of every weight" exactly.

    The defect is affine in lambda; the constant part is the defect at
    lambda = 0 and the lambda-coefficient is T applied to the source
    bracket, so both parts are checked independently.
    """
    _check_dims(action, T)
    dp = action.target.dim
    out = []
    for u, v, w in product(range(dp), repeat=3):
        if not vec_is_zero(_rbo_defect(action, ZERO, T, u, v, w)):
            out.append(Violation("rota-baxter-constant-part", (u + 1, v + 1, w + 1)))
        if not vec_is_zero(T.apply(action.target.bracket[u][v][w])):
            out.append(Violation("rota-baxter-weight-part", (u + 1, v + 1, w + 1)))
    return tuple(out)


def _check_dims(action: ActionData, T: LinearMap):
    if T.cols != action.target.dim or T.rows != action.algebra.dim:
        raise StructureError("operator matrix shape differs from action dimensions")


def projection_rbo(
    L: LieTripleSystem, Lprime: SubspaceBasis, complement: SubspaceBasis
) -> LinearMap:
    """Projection of L onto an abelian subsystem along a complement.

    Requirements, each reported by name when violated: the adjoint
    representation is an action of L on itself; Lprime is an abelian
    subsystem; the derived algebra meets Lprime trivially; complement
    and Lprime are an exact direct-sum decomposition.  The resulting
    projection is verified to be an operator of every weight before it
    is returned; that final check also rejects complements that fail
    to absorb the derived algebra.
    """
    act = self_action(L)
    if verify_action(act):
        raise VerificationError("projection requires the adjoint action: derived algebra not central")
    if not is_abelian_subsystem(L, Lprime):
        raise VerificationError("projection requires an abelian subsystem target")
    der = derived_algebra(L)
    inter = sum_dim(der, Lprime) - der.dim - Lprime.dim
    if inter != 0:
        raise VerificationError("projection requires derived algebra to meet the target trivially")
    if complement.ambient_dim != L.dim:
        raise StructureError("complement ambient dimension differs from system dimension")
    if complement.dim + Lprime.dim != L.dim or sum_dim(complement, Lprime) != L.dim:
        raise VerificationError("projection requires complement (+) target = whole space")
    cols = list(complement.vectors) + list(Lprime.vectors)
    B = Matrix.from_columns(cols, L.dim)
    Binv = invert(B)
    sel = Matrix.from_rows(
        [
            [Fraction(1) if (r == c and r >= complement.dim) else ZERO for c in range(L.dim)]
            for r in range(L.dim)
        ]
    )
    P = B @ sel @ Binv
    if check_rbo_all_weights(act, P):
        raise VerificationError(
            "projection is not an operator of every weight: complement does not absorb the derived algebra"
        )
    return P


def sum_dim(a: SubspaceBasis, b: SubspaceBasis) -> int:
    return SubspaceBasis.from_spanning(list(a.vectors) + list(b.vectors), a.ambient_dim).dim


def graph_subsystem(rbo: RelativeRBO) -> SubspaceBasis:
    """Span of {Tu + u : u basis of L'} inside the semidirect product."""
    d, dp = rbo.ambient.dim, rbo.source.dim
    vectors = [rbo.T.column(u) + basis_vector(dp, u) for u in range(dp)]
    return SubspaceBasis.from_spanning(vectors, d + dp)


def graph_is_subsystem(rbo: RelativeRBO, semidirect: LieTripleSystem | None = None) -> bool:
    if semidirect is None:
        semidirect = semidirect_product(rbo.action, rbo.weight)
    return is_subsystem(semidirect, graph_subsystem(rbo))


def descendent_lts(rbo: RelativeRBO) -> LieTripleSystem:
    """The induced system on L' with bracket

        [u,v,w]_T = D(Tu,Tv)w + theta(Tv,Tw)u - theta(Tu,Tw)v
                    + lambda [u,v,w]'

    Requires (RB); T is then a homomorphism into L, which callers can
    confirm with :func:`triplekit.lts.is_homomorphism`.
    """
    report = check_rbo(rbo.action, rbo.weight, rbo.T)
    if report:
        raise VerificationError(
            f"descendent system requires the Rota-Baxter identity; {len(report)} basis triples fail"
        )
    Lp, rep, T = rbo.source, rbo.action.rep, rbo.T
    dp = Lp.dim
    entries = {}
    for u, v, w in product(range(dp), repeat=3):
        Tu, Tv, Tw = T.column(u), T.column(v), T.column(w)
        ew, eu, ev = basis_vector(dp, w), basis_vector(dp, u), basis_vector(dp, v)
        t1 = rep.d_vec(Tu, Tv).apply(ew)
        t2 = rep.theta_vec(Tv, Tw).apply(eu)
        t3 = rep.theta_vec(Tu, Tw).apply(ev)
        lam = Lp.bracket[u][v][w]
        vec = tuple(
            t1[l] + t2[l] - t3[l] + rbo.weight * lam[l] for l in range(dp)
        )
        if not vec_is_zero(vec):
            entries[(u, v, w)] = vec
    return LieTripleSystem.from_entries(dp, entries, Lp.basis_names)


def nijenhuis_defect(L: LieTripleSystem, N: Matrix, x: int, y: int, z: int) -> Vector:
    """LHS - RHS of the Nijenhuis identity at basis triple (x, y, z)."""
    E = (basis_vector(L.dim, x), basis_vector(L.dim, y), basis_vector(L.dim, z))
    Nx, Ny, Nz = N.column(x), N.column(y), N.column(z)
    lhs = L.bracket_eval(Nx, Ny, Nz)
    acc = list(N.apply(L.bracket_eval(Nx, Ny, E[2])))
    for term in (L.bracket_eval(E[0], Ny, Nz), L.bracket_eval(Nx, E[1], Nz)):
        t = N.apply(term)
        for l in range(L.dim):
            acc[l] += t[l]
    for term in (
        L.bracket_eval(Nx, E[1], E[2]),
        L.bracket_eval(E[0], Ny, E[2]),
        L.bracket_eval(E[0], E[1], Nz),
    ):
        t = N.apply(N.apply(term))
        for l in range(L.dim):
            acc[l] -= t[l]
    t = N.apply(N.apply(N.apply(L.bracket[x][y][z])))
    for l in range(L.dim):
        acc[l] += t[l]
    return vec_sub(lhs, tuple(acc))


def nijenhuis_check(L: LieTripleSystem, N: Matrix) -> Report:
    """All basis triples violating the seven-term Nijenhuis identity."""
    if N.rows != L.dim or N.cols != L.dim:
        raise StructureError("Nijenhuis candidate must be square on the system")
    out = []
    for x, y, z in product(range(L.dim), repeat=3):
        if not vec_is_zero(nijenhuis_defect(L, N, x, y, z)):
            out.append(Violation("nijenhuis-identity", (x + 1, y + 1, z + 1)))
    return tuple(out)


def is_nijenhuis(L: LieTripleSystem, N: Matrix) -> bool:
    """Early-exit variant of :func:`nijenhuis_check`, scanning the triples
    most likely to fail first (highest indices) for speed on sweeps."""
    if N.rows != L.dim or N.cols != L.dim:
        raise StructureError("Nijenhuis candidate must be square on the system")
    idx = range(L.dim - 1, -1, -1)
    for x, y, z in product(idx, repeat=3):
        if not vec_is_zero(nijenhuis_defect(L, N, x, y, z)):
            return False
    return True


def nijenhuis_lift(action: ActionData, T: LinearMap) -> Matrix:
    """Block map (x, u) -> (x + Tu, 0) on L (+) L'; idempotent by shape."""
    _check_dims(action, T)
    d, dp = action.algebra.dim, action.target.dim
    n = d + dp
    rows = []
    for r in range(d):
        rows.append(
            tuple(Fraction(1) if c == r else ZERO for c in range(d)) + tuple(T.entries[r])
        )
    for _ in range(dp):
        rows.append(zero_vector(n))
    return Matrix.from_rows(rows)


@dataclass(frozen=True)
class RBOHomomorphism:
    """Maps (psi_L, psi_Lprime) intertwining two operators over one action."""

    source: RelativeRBO
    target: RelativeRBO
    psi_L: LinearMap
    psi_Lprime: LinearMap

    def __post_init__(self):
        d, dp = self.source.ambient.dim, self.source.source.dim
        if self.psi_L.rows != d or self.psi_L.cols != d:
            raise StructureError("psi_L must be square on L")
        if self.psi_Lprime.rows != dp or self.psi_Lprime.cols != dp:
            raise StructureError("psi_Lprime must be square on L'")


def check_rbo_homomorphism(h: RBOHomomorphism) -> Report:
    """Full homomorphism conditions between operators sharing an action.

    Both maps must respect the triple brackets of their spaces, the
    intertwining relation psi_L T = T' psi_Lprime must hold as a
    matrix identity, and psi_Lprime must be equivariant for theta and
    D against psi_L on all basis pairs and vectors.
    """
    if h.source.action is not h.target.action and h.source.action != h.target.action:
        raise StructureError("operator homomorphism requires a shared action")
    if h.source.weight != h.target.weight:
        raise StructureError("operator homomorphism requires equal weights")
    out = []
    L, Lp = h.source.ambient, h.source.source
    rep = h.source.action.rep
    if not is_homomorphism(HomomorphismCandidate(L, L, h.psi_L)):
        out.append(Violation("psi_L-not-system-homomorphism"))
    if not is_homomorphism(HomomorphismCandidate(Lp, Lp, h.psi_Lprime)):
        out.append(Violation("psi_Lprime-not-system-homomorphism"))
    lhs = h.psi_L @ h.source.T
    rhs = h.target.T @ h.psi_Lprime
    if lhs != rhs:
        out.append(Violation("intertwining", (), "psi_L T != T' psi_Lprime"))
    d, dp = L.dim, Lp.dim
    psiL_cols = [h.psi_L.column(i) for i in range(d)]
    for x, y in product(range(d), repeat=2):
        th_push = rep.theta_vec(psiL_cols[x], psiL_cols[y]) @ h.psi_Lprime
        th_pull = h.psi_Lprime @ rep.theta[x][y]
        if th_push != th_pull:
            out.append(Violation("theta-equivariance", (x + 1, y + 1)))
        d_push = rep.d_vec(psiL_cols[x], psiL_cols[y]) @ h.psi_Lprime
        d_pull = h.psi_Lprime @ rep.d_basis(x, y)
        if d_push != d_pull:
            out.append(Violation("D-equivariance", (x + 1, y + 1)))
    return tuple(out)
