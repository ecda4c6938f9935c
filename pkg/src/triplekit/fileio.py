"""JSON formats for algebras, representations, operators and cochains.

All indices in files are 1-based.  Scalars are strings "p/q" or "p".
Serialization is canonical: sorted keys, two-space indent, entries
sorted by index, zero entries omitted, so load -> dump round-trips
byte-identically and identical inputs give byte-identical reports.

Algebra files list nonzero basis brackets; the loader completes each
listed (i, j, k) entry with the skew pair (j, i, k) and rejects
contradictions, matching how such tables are usually written down
(only one of each skew pair, zeros omitted).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .cohomology import Cochain
from .linalg import (
    Matrix,
    StructureError,
    SubspaceBasis,
    format_scalar,
    parse_scalar,
    vec_is_zero,
    zero_vector,
)
from .lts import LieTripleSystem
from .representations import ActionData, RepresentationData
from .rota_baxter import RBOHomomorphism, RelativeRBO


def dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _resolve(node, base_dir: Path | None, loader):
    """A node may be an inline object or a path string relative to the file."""
    if isinstance(node, str):
        path = Path(node)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return loader(path)
    return node


def _require(mapping, key, context):
    if not isinstance(mapping, dict) or key not in mapping:
        raise StructureError(f"{context}: missing required key {key!r}")
    return mapping[key]


# ---------------------------------------------------------------------------
# algebras


def algebra_from_json(data: dict) -> LieTripleSystem:
    dim = _require(data, "dim", "algebra")
    if not isinstance(dim, int) or dim < 0:
        raise StructureError("algebra: dim must be a non-negative integer")
    names = data.get("basis") or [f"e{i+1}" for i in range(dim)]
    if len(names) != dim:
        raise StructureError("algebra: basis name count differs from dim")
    entries: dict[tuple[int, int, int], list[Fraction]] = {}
    for item in data.get("brackets", []):
        args = _require(item, "args", "algebra bracket entry")
        if len(args) != 3 or not all(isinstance(a, int) and 1 <= a <= dim for a in args):
            raise StructureError(f"algebra: bad bracket args {args!r}")
        i, j, k = (a - 1 for a in args)
        vec = list(zero_vector(dim))
        for key, val in _require(item, "value", "algebra bracket entry").items():
            try:
                l = int(key) - 1
            except ValueError as exc:
                raise StructureError(f"algebra: bracket value index {key!r} is not an integer") from exc
            if not 0 <= l < dim:
                raise StructureError(f"algebra: bracket value index {key} out of range")
            vec[l] = parse_scalar(val)
        if i == j:
            if not vec_is_zero(tuple(vec)):
                raise StructureError(
                    f"algebra: bracket at {args} contradicts skew-symmetry (equal first indices)"
                )
            continue
        for key_idx, value in ((( i, j, k), tuple(vec)), ((j, i, k), tuple(-x for x in vec))):
            if key_idx in entries:
                if entries[key_idx] != value:
                    one = tuple(a + 1 for a in key_idx)
                    raise StructureError(f"algebra: contradictory entries for bracket {one}")
            else:
                entries[key_idx] = value
    return LieTripleSystem.from_entries(dim, entries, names)


def algebra_to_json(L: LieTripleSystem) -> dict:
    brackets = []
    for i, j, k, vec in L.nonzero:
        if i > j:
            continue  # skew partner is implied
        value = {str(l + 1): format_scalar(x) for l, x in enumerate(vec) if x}
        brackets.append({"args": [i + 1, j + 1, k + 1], "value": value})
    brackets.sort(key=lambda b: b["args"])
    return {"dim": L.dim, "basis": list(L.basis_names), "brackets": brackets}


def load_algebra(path) -> LieTripleSystem:
    return algebra_from_json(_read_json(path))


# ---------------------------------------------------------------------------
# representations and actions


def representation_from_json(data: dict, base_dir: Path | None = None) -> RepresentationData:
    algebra = algebra_from_json(_resolve(_require(data, "algebra", "representation"), base_dir, _read_json))
    space_dim = _require(data, "space_dim", "representation")
    zero = Matrix.zeros(space_dim, space_dim)
    table = [[zero for _ in range(algebra.dim)] for _ in range(algebra.dim)]
    for item in data.get("theta", []):
        args = _require(item, "args", "theta entry")
        if len(args) != 2 or not all(isinstance(a, int) and 1 <= a <= algebra.dim for a in args):
            raise StructureError(f"representation: bad theta args {args!r}")
        rows = _require(item, "matrix", "theta entry")
        mat = Matrix.from_rows(rows)
        if mat.rows != space_dim or mat.cols != space_dim:
            raise StructureError(f"representation: theta matrix at {args} has wrong shape")
        table[args[0] - 1][args[1] - 1] = mat
    return RepresentationData(algebra, space_dim, tuple(tuple(row) for row in table))


def representation_to_json(rep: RepresentationData) -> dict:
    theta = []
    for i in range(rep.algebra.dim):
        for j in range(rep.algebra.dim):
            mat = rep.theta[i][j]
            if mat.is_zero():
                continue
            theta.append({
                "args": [i + 1, j + 1],
                "matrix": [[format_scalar(x) for x in row] for row in mat.entries],
            })
    return {
        "algebra": algebra_to_json(rep.algebra),
        "space_dim": rep.space_dim,
        "theta": theta,
    }


def load_representation(path) -> RepresentationData:
    path = Path(path)
    return representation_from_json(_read_json(path), path.parent)


def action_from_json(data: dict, base_dir: Path | None = None) -> ActionData:
    rep = representation_from_json(
        _resolve(_require(data, "representation", "action"), base_dir, _read_json), base_dir
    )
    target = algebra_from_json(_resolve(_require(data, "target", "action"), base_dir, _read_json))
    return ActionData(rep, target)


def action_to_json(action: ActionData) -> dict:
    return {
        "representation": representation_to_json(action.rep),
        "target": algebra_to_json(action.target),
    }


def load_action(path) -> ActionData:
    path = Path(path)
    return action_from_json(_read_json(path), path.parent)


# ---------------------------------------------------------------------------
# operators


def matrix_from_json(rows, rows_expected=None, cols_expected=None, context="matrix") -> Matrix:
    mat = Matrix.from_rows(rows)
    if rows_expected is not None and mat.rows != rows_expected:
        raise StructureError(f"{context}: expected {rows_expected} rows, found {mat.rows}")
    if cols_expected is not None and mat.cols != cols_expected:
        raise StructureError(f"{context}: expected {cols_expected} columns, found {mat.cols}")
    return mat


def matrix_to_json(mat: Matrix) -> list:
    return [[format_scalar(x) for x in row] for row in mat.entries]


def rbo_from_json(data: dict, base_dir: Path | None = None) -> RelativeRBO:
    action = action_from_json(_require(data, "action", "operator"), base_dir)
    weight = parse_scalar(_require(data, "weight", "operator"))
    T = matrix_from_json(
        _require(data, "T", "operator"),
        action.algebra.dim,
        action.target.dim,
        "operator matrix",
    )
    return RelativeRBO(action, weight, T)


def rbo_to_json(rbo: RelativeRBO) -> dict:
    return {
        "action": action_to_json(rbo.action),
        "weight": format_scalar(rbo.weight),
        "T": matrix_to_json(rbo.T),
    }


def load_rbo(path) -> RelativeRBO:
    path = Path(path)
    return rbo_from_json(_read_json(path), path.parent)


def homomorphism_from_json(data: dict, base_dir: Path | None = None) -> RBOHomomorphism:
    source = rbo_from_json(_resolve(_require(data, "source", "homomorphism"), base_dir, _read_json), base_dir)
    target = rbo_from_json(_resolve(_require(data, "target", "homomorphism"), base_dir, _read_json), base_dir)
    d, dp = source.ambient.dim, source.source.dim
    psi_l = matrix_from_json(_require(data, "psi_L", "homomorphism"), d, d, "psi_L")
    psi_lp = matrix_from_json(_require(data, "psi_Lprime", "homomorphism"), dp, dp, "psi_Lprime")
    return RBOHomomorphism(source, target, psi_l, psi_lp)


def load_homomorphism(path) -> RBOHomomorphism:
    path = Path(path)
    return homomorphism_from_json(_read_json(path), path.parent)


# ---------------------------------------------------------------------------
# cochains and subspaces


def cochain_from_json(data: dict) -> Cochain:
    """Load a cochain; dims are taken from the file or inferred.

    Degree >= 1 infers source_dim from the outer nesting and
    target_dim from the innermost vectors.  Degree -1 infers
    target_dim from the wedge coordinate count (the inverse triangular
    number); source_dim then defaults to target_dim, the self-action
    case, unless stated.
    """
    degree = _require(data, "degree", "cochain")
    coeffs = _require(data, "coeffs", "cochain")
    if degree == -1:
        count = len(coeffs)
        target_dim = data.get("target_dim")
        if target_dim is None:
            target_dim = next(
                (d for d in range(count + 2) if d * (d - 1) // 2 == count), None
            )
            if target_dim is None:
                raise StructureError("cochain: wedge coordinate count is not triangular")
        source_dim = data.get("source_dim", target_dim)
        return Cochain(-1, source_dim, target_dim, tuple(parse_scalar(x) for x in coeffs))
    if not (isinstance(degree, int) and degree >= 1 and degree % 2 == 1):
        raise StructureError(f"cochain: unsupported degree {degree!r}")

    node = coeffs
    for _ in range(degree):
        if not isinstance(node, list) or not node:
            raise StructureError("cochain: coefficient nesting shallower than the degree")
        node = node[0]
    source_dim = data.get("source_dim", len(coeffs))
    target_dim = data.get("target_dim", len(node) if isinstance(node, list) else 0)

    flat: list = []

    def walk(node, depth):
        if depth == degree:
            if len(node) != target_dim:
                raise StructureError("cochain: value vector has wrong length")
            flat.append(tuple(parse_scalar(x) for x in node))
            return
        if len(node) != source_dim:
            raise StructureError("cochain: coefficient nesting does not match source_dim")
        for child in node:
            walk(child, depth + 1)

    walk(coeffs, 0)
    return Cochain(degree, source_dim, target_dim, tuple(flat))


def cochain_to_json(f: Cochain) -> dict:
    if f.degree == -1:
        coeffs = [format_scalar(x) for x in f.coeffs]
    else:
        def build(prefix):
            if len(prefix) == f.degree:
                return [format_scalar(x) for x in f.value(prefix)]
            return [build(prefix + (i,)) for i in range(f.source_dim)]

        coeffs = build(())
    return {
        "degree": f.degree,
        "source_dim": f.source_dim,
        "target_dim": f.target_dim,
        "coeffs": coeffs,
    }


def load_cochain(path) -> Cochain:
    return cochain_from_json(_read_json(path))


def subspace_from_json(data: dict) -> SubspaceBasis:
    ambient = _require(data, "ambient_dim", "subspace")
    vectors = [tuple(parse_scalar(x) for x in row) for row in _require(data, "vectors", "subspace")]
    return SubspaceBasis.from_spanning(vectors, ambient)


def subspace_to_json(s: SubspaceBasis) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "vectors": [[format_scalar(x) for x in v] for v in s.vectors],
    }


def load_subspace(path) -> SubspaceBasis:
    return subspace_from_json(_read_json(path))


def _read_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StructureError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path} is not valid JSON: {exc}") from exc
