"""Infinitesimal deformations T + t*S of a relative Rota-Baxter operator.

The defining identity is cubic in the operator, so T + t*S satisfies
it for every t exactly when the coefficient equations at t, t^2 and
t^3 all hold; each is checked on basis triples of the source.  The
order-t equation is precisely the closedness of S as a degree-1
cochain, so verified deformation directions carry a class in the
degree-1 cohomology of the operator complex, and equivalent
deformations share that class.

Equivalence of two directions S1, S2 is witnessed by a wedge element X
of the ambient system making (id + t[X,-], id + t D(X)) an operator
homomorphism; extracting first-order coefficients gives two linear
conditions on X:

  (E1)  S1(u) - S2(u) = T D(X) u - [X, Tu]
  (E2)  [X, S1(u)] = S2( D(X) u )

Both are linear in the wedge coordinates, so witnesses are found by
one exact linear solve.  Strict mode additionally demands the
first-order parts of the theta- and D-equivariance conditions of an
operator homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cohomology import (
    Cochain,
    cochain_to_map,
    cohomology_data,
    flatten_cochain,
    one_cocycle_check,
    wedge_pairs,
    zero_cochain,
)
from .linalg import (
    Matrix,
    StructureError,
    SubspaceBasis,
    Vector,
    VerificationError,
    ZERO,
    basis_vector,
    solve,
    vec_sub,
)
from .reporting import Report, Violation
from .rota_baxter import RelativeRBO

__all__ = [
    "InfinitesimalDeformation",
    "EquivalenceWitness",
    "check_deformation",
    "deformation_cocycle_class",
    "check_equivalence",
    "find_equivalence_witness",
    "is_trivial_deformation",
    "wedge_bracket_operator",
    "wedge_d_operator",
]


@dataclass(frozen=True)
class InfinitesimalDeformation:
    base: RelativeRBO
    direction: Cochain  # degree 1, source L', target L

    def __post_init__(self):
        if self.direction.degree != 1:
            raise StructureError("deformation direction must be a degree-1 cochain")
        if (
            self.direction.source_dim != self.base.source.dim
            or self.direction.target_dim != self.base.ambient.dim
        ):
            raise StructureError("deformation direction dimensions differ from the operator")

    def direction_map(self) -> Matrix:
        return cochain_to_map(self.direction)


@dataclass(frozen=True)
class EquivalenceWitness:
    wedge: Cochain  # degree -1

    def __post_init__(self):
        if self.wedge.degree != -1:
            raise StructureError("equivalence witness must be a degree -1 cochain")


def wedge_bracket_operator(rbo: RelativeRBO, wedge: Cochain) -> Matrix:
    """[X, -] on the ambient system: x -> sum a_ij [e_i, e_j, x]."""
    L = rbo.ambient
    pairs = wedge_pairs(L.dim)
    cols = []
    for x in range(L.dim):
        acc = [ZERO] * L.dim
        for (i, j), co in zip(pairs, wedge.coeffs):
            if co:
                vec = L.bracket[i][j][x]
                for l in range(L.dim):
                    acc[l] += co * vec[l]
        cols.append(tuple(acc))
    return Matrix.from_columns(cols, L.dim)


def wedge_d_operator(rbo: RelativeRBO, wedge: Cochain) -> Matrix:
    """D(X) on the source space: sum a_ij D(e_i, e_j) through the action."""
    rep = rbo.action.rep
    pairs = wedge_pairs(rbo.ambient.dim)
    acc = Matrix.zeros(rbo.source.dim, rbo.source.dim)
    for (i, j), co in zip(pairs, wedge.coeffs):
        if co:
            acc = acc + rep.d_basis(i, j).scale(co)
    return acc


def check_deformation(d: InfinitesimalDeformation) -> Report:
    """Coefficient equations at t, t^2, t^3 on all basis triples."""
    rbo = d.base
    L, Lp, rep, T = rbo.ambient, rbo.source, rbo.action.rep, rbo.T
    S = d.direction_map()
    dp = Lp.dim
    out = []

    def combo(mu, mv, mw, u, v, w, with_weight):
        """D(mu_u, mv_v)w - theta(mu_u, mw_w)v + theta(mv_v, mw_w)u
        (+ weight bracket), a vector in the source space."""
        uu, vv, ww = mu.column(u), mv.column(v), mw.column(w)
        eu, ev, ew = basis_vector(dp, u), basis_vector(dp, v), basis_vector(dp, w)
        t1 = rep.d_vec(uu, vv).apply(ew)
        t2 = rep.theta_vec(uu, ww).apply(ev)
        t3 = rep.theta_vec(vv, ww).apply(eu)
        if with_weight:
            lam = Lp.bracket[u][v][w]
            return tuple(
                t1[l] - t2[l] + t3[l] + rbo.weight * lam[l] for l in range(dp)
            )
        return tuple(t1[l] - t2[l] + t3[l] for l in range(dp))

    for u, v, w in product(range(dp), repeat=3):
        Tu, Tv, Tw = T.column(u), T.column(v), T.column(w)
        Su, Sv, Sw = S.column(u), S.column(v), S.column(w)
        eu, ev, ew = basis_vector(dp, u), basis_vector(dp, v), basis_vector(dp, w)

        lhs1 = L.bracket_eval(Su, Tv, Tw)
        for term in (L.bracket_eval(Tu, Sv, Tw), L.bracket_eval(Tu, Tv, Sw)):
            lhs1 = tuple(a + b for a, b in zip(lhs1, term))
        m1a = rep.theta_vec(Tv, Sw).apply(eu)
        m1b = rep.theta_vec(Tu, Sw).apply(ev)
        m1c = rep.d_vec(Su, Tv).apply(ew)
        m1d = rep.theta_vec(Sv, Tw).apply(eu)
        m1e = rep.theta_vec(Su, Tw).apply(ev)
        m1f = rep.d_vec(Tu, Sv).apply(ew)
        mixed = tuple(
            m1a[l] - m1b[l] + m1c[l] + m1d[l] - m1e[l] + m1f[l] for l in range(dp)
        )
        rhs1 = T.apply(mixed)
        rhs1 = tuple(
            a + b for a, b in zip(rhs1, S.apply(combo(T, T, T, u, v, w, True)))
        )
        if lhs1 != rhs1:
            out.append(Violation("order-t", (u + 1, v + 1, w + 1)))

        lhs2 = L.bracket_eval(Su, Sv, Tw)
        for term in (L.bracket_eval(Tu, Sv, Sw), L.bracket_eval(Su, Tv, Sw)):
            lhs2 = tuple(a + b for a, b in zip(lhs2, term))
        rhs2 = S.apply(mixed_without_weight(rep, T, S, u, v, w, dp))
        rhs2 = tuple(
            a + b for a, b in zip(rhs2, T.apply(combo(S, S, S, u, v, w, False)))
        )
        if lhs2 != rhs2:
            out.append(Violation("order-t2", (u + 1, v + 1, w + 1)))

        lhs3 = L.bracket_eval(Su, Sv, Sw)
        rhs3 = S.apply(combo(S, S, S, u, v, w, False))
        if lhs3 != rhs3:
            out.append(Violation("order-t3", (u + 1, v + 1, w + 1)))
    return tuple(out)


def mixed_without_weight(rep, T, S, u, v, w, dp) -> Vector:
    """theta(Sv,Tw)u - theta(Su,Tw)v + D(Tu,Sv)w + theta(Tv,Sw)u
    - theta(Tu,Sw)v + D(Su,Tv)w."""
    Tu, Tv, Tw = T.column(u), T.column(v), T.column(w)
    Su, Sv, Sw = S.column(u), S.column(v), S.column(w)
    eu, ev, ew = basis_vector(dp, u), basis_vector(dp, v), basis_vector(dp, w)
    t1 = rep.theta_vec(Sv, Tw).apply(eu)
    t2 = rep.theta_vec(Su, Tw).apply(ev)
    t3 = rep.d_vec(Tu, Sv).apply(ew)
    t4 = rep.theta_vec(Tv, Sw).apply(eu)
    t5 = rep.theta_vec(Tu, Sw).apply(ev)
    t6 = rep.d_vec(Su, Tv).apply(ew)
    return tuple(t1[l] - t2[l] + t3[l] + t4[l] - t5[l] + t6[l] for l in range(dp))


def deformation_cocycle_class(d: InfinitesimalDeformation):
    """(is_cocycle, class coordinates in a fixed basis of H^1).

    The H^1 basis extends the canonical coboundary basis to the
    cocycle space by greedy pivoting over the cocycle basis vectors,
    so the coordinates are deterministic for a given operator.
    """
    rbo = d.base
    if one_cocycle_check(rbo, d.direction):
        raise VerificationError("direction is not a 1-cocycle; no cohomology class")
    data = cohomology_data(rbo, 1)
    zb, bb = data.cocycles, data.coboundaries
    complement = []
    current = list(bb.vectors)
    span = SubspaceBasis.from_spanning(current, zb.ambient_dim)
    for vec in zb.vectors:
        if not span.contains(vec):
            complement.append(vec)
            current.append(vec)
            span = SubspaceBasis.from_spanning(current, zb.ambient_dim)
    cols = list(bb.vectors) + complement
    target = flatten_cochain(d.direction)
    if not cols:
        return True, ()
    m = Matrix.from_columns(cols, zb.ambient_dim)
    x = solve(m, target)
    if x is None:
        raise VerificationError("cocycle does not decompose over the computed basis")
    return True, tuple(x[len(bb.vectors):])


def _equivalence_system(
    d1: InfinitesimalDeformation, d2: InfinitesimalDeformation, strict: bool = False
):
    """Stack (E1) and (E2) as one linear system over wedge coordinates.

    In strict mode the first-order equivariance conditions are linear
    in X as well and are appended as extra homogeneous rows.
    """
    rbo = d1.base
    L, Lp, rep, T = rbo.ambient, rbo.source, rbo.action.rep, rbo.T
    dp, dd = Lp.dim, L.dim
    pairs = wedge_pairs(dd)
    S1, S2 = d1.direction_map(), d2.direction_map()
    one = ZERO + 1
    cols = []
    for k in range(len(pairs)):
        unit = Cochain(-1, dp, dd, tuple(
            one if t == k else ZERO for t in range(len(pairs))
        ))
        dx = wedge_d_operator(rbo, unit)
        bx = wedge_bracket_operator(rbo, unit)
        col = []
        for u in range(dp):
            eu = basis_vector(dp, u)
            line1 = vec_sub(T.apply(dx.apply(eu)), bx.apply(T.column(u)))
            col.extend(line1)
        for u in range(dp):
            eu = basis_vector(dp, u)
            line2 = vec_sub(bx.apply(S1.column(u)), S2.apply(dx.apply(eu)))
            col.extend(line2)
        if strict:
            for x, y in product(range(dd), repeat=2):
                th = rep.theta[x][y]
                dm = rep.d_basis(x, y)
                ex, ey = basis_vector(dd, x), basis_vector(dd, y)
                th_def = (dx @ th) - rep.theta_vec(bx.apply(ex), ey) \
                    - rep.theta_vec(ex, bx.apply(ey)) - (th @ dx)
                d_def = (dx @ dm) - rep.d_vec(bx.apply(ex), ey) \
                    - rep.d_vec(ex, bx.apply(ey)) - (dm @ dx)
                for mat in (th_def, d_def):
                    for row in mat.entries:
                        col.extend(row)
        cols.append(tuple(col))
    rhs = []
    for u in range(dp):
        rhs.extend(vec_sub(S1.column(u), S2.column(u)))
    rhs.extend([ZERO] * (dp * dd))
    if strict:
        rhs.extend([ZERO] * (dd * dd * 2 * dp * dp))
    height = len(rhs)
    m = Matrix.from_columns(cols, height) if cols else Matrix.zeros(height, 0)
    return m, tuple(rhs)


def check_equivalence(
    d1: InfinitesimalDeformation, d2: InfinitesimalDeformation, w: EquivalenceWitness,
    strict: bool = False,
) -> Report:
    """Do (E1) and (E2) hold for the given witness, on all basis vectors?

    Strict mode also checks the first-order parts of theta- and
    D-equivariance for the pair (id + t[X,-], id + t D(X)).
    """
    if d1.base != d2.base:
        raise StructureError("equivalence is defined for deformations of one operator")
    rbo = d1.base
    L, Lp, rep, T = rbo.ambient, rbo.source, rbo.action.rep, rbo.T
    dp = Lp.dim
    S1, S2 = d1.direction_map(), d2.direction_map()
    bx = wedge_bracket_operator(rbo, w.wedge)
    dx = wedge_d_operator(rbo, w.wedge)
    out = []
    for u in range(dp):
        eu = basis_vector(dp, u)
        lhs = vec_sub(S1.column(u), S2.column(u))
        rhs = vec_sub(T.apply(dx.apply(eu)), bx.apply(T.column(u)))
        if lhs != rhs:
            out.append(Violation("intertwining-order-t", (u + 1,)))
        lhs = bx.apply(S1.column(u))
        rhs = S2.apply(dx.apply(eu))
        if lhs != rhs:
            out.append(Violation("compatibility-order-t", (u + 1,)))
    if strict:
        d = L.dim
        for x, y in product(range(d), repeat=2):
            th = rep.theta[x][y]
            dm = rep.d_basis(x, y)
            ex, ey = basis_vector(d, x), basis_vector(d, y)
            th_var = rep.theta_vec(bx.apply(ex), ey) + rep.theta_vec(ex, bx.apply(ey))
            lhs = dx @ th
            rhs = th_var + (th @ dx)
            if lhs != rhs:
                out.append(Violation("theta-equivariance-order-t", (x + 1, y + 1)))
            d_var = rep.d_vec(bx.apply(ex), ey) + rep.d_vec(ex, bx.apply(ey))
            lhs = dx @ dm
            rhs = d_var + (dm @ dx)
            if lhs != rhs:
                out.append(Violation("D-equivariance-order-t", (x + 1, y + 1)))
    return tuple(out)


def find_equivalence_witness(
    d1: InfinitesimalDeformation, d2: InfinitesimalDeformation, strict: bool = False
):
    """A wedge witness making d1 and d2 equivalent, or None.

    Any returned witness has already passed :func:`check_equivalence`.
    """
    if d1.base != d2.base:
        raise StructureError("equivalence is defined for deformations of one operator")
    m, rhs = _equivalence_system(d1, d2, strict=strict)
    x = solve(m, rhs)
    if x is None:
        return None
    rbo = d1.base
    w = EquivalenceWitness(Cochain(-1, rbo.source.dim, rbo.ambient.dim, tuple(x)))
    if check_equivalence(d1, d2, w, strict=strict):
        return None
    return w


def is_trivial_deformation(d: InfinitesimalDeformation, strict: bool = False):
    """Witness equating d with the zero-direction deformation, or None."""
    zero = InfinitesimalDeformation(
        d.base, zero_cochain(1, d.base.source.dim, d.base.ambient.dim)
    )
    return find_equivalence_witness(d, zero, strict=strict)
