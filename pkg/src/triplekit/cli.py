"""Batch command line front end.

Every command loads JSON inputs, delegates to the library and prints
one JSON document; no computation lives here.  Exit codes: 0 success,
1 a verification ran and found violations, 2 malformed input or usage.
Reports are printed with sorted keys and normalized scalars, so
identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

from . import fileio
from .cohomology import (
    cochain_map_p,
    cochain_space_basis,
    coboundary_T,
    cohomology_group,
    one_cocycle_check,
)
from .deformations import (
    EquivalenceWitness,
    InfinitesimalDeformation,
    check_deformation,
    check_equivalence,
    deformation_cocycle_class,
    find_equivalence_witness,
    is_trivial_deformation,
)
from .fixtures import fixture_path, list_fixtures
from .linalg import StructureError, VerificationError, format_scalar, parse_scalar
from .lts import center, derived_algebra, is_abelian_subsystem, is_subsystem, verify_lts
from .properties import equivalence_sweep
from .reporting import Report, summarize
from .representations import adjoint_representation, semidirect_product, verify_action, verify_representation
from .rota_baxter import (
    RelativeRBO,
    check_rbo,
    check_rbo_all_weights,
    check_rbo_homomorphism,
    descendent_lts,
    graph_is_subsystem,
    graph_subsystem,
    nijenhuis_check,
    nijenhuis_lift,
)


def _emit(data) -> None:
    sys.stdout.write(fileio.dump_json(data))


def _report_result(report: Report) -> int:
    _emit({"violations": [v.to_json() for v in report], **summarize(report)})
    return 1 if report else 0


def _with_weight(rbo: RelativeRBO, args) -> RelativeRBO:
    if getattr(args, "weight", None) is None:
        return rbo
    return RelativeRBO(rbo.action, parse_scalar(args.weight), rbo.T)


# ---------------------------------------------------------------------------
# command handlers


def cmd_lts_verify(args) -> int:
    return _report_result(verify_lts(fileio.load_algebra(args.algebra)))


def cmd_lts_center(args) -> int:
    _emit(fileio.subspace_to_json(center(fileio.load_algebra(args.algebra))))
    return 0


def cmd_lts_derived(args) -> int:
    _emit(fileio.subspace_to_json(derived_algebra(fileio.load_algebra(args.algebra))))
    return 0


def cmd_lts_subsystem(args) -> int:
    L = fileio.load_algebra(args.algebra)
    S = fileio.load_subspace(args.span)
    sub = is_subsystem(L, S)
    _emit({
        "is_subsystem": sub,
        "is_abelian_subsystem": bool(sub and is_abelian_subsystem(L, S)),
    })
    return 0


def cmd_rep_verify(args) -> int:
    return _report_result(verify_representation(fileio.load_representation(args.representation)))


def cmd_rep_adjoint(args) -> int:
    L = fileio.load_algebra(args.algebra)
    _emit(fileio.representation_to_json(adjoint_representation(L)))
    return 0


def cmd_rep_action(args) -> int:
    return _report_result(verify_action(fileio.load_action(args.action)))


def cmd_sd_build(args) -> int:
    action = fileio.load_action(args.action)
    product = semidirect_product(action, parse_scalar(args.weight))
    _emit(fileio.algebra_to_json(product))
    return 0


def cmd_rbo_check(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    if args.all_weights:
        return _report_result(check_rbo_all_weights(rbo.action, rbo.T))
    return _report_result(check_rbo(rbo.action, rbo.weight, rbo.T))


def cmd_rbo_graph(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    graph = graph_subsystem(rbo)
    _emit({
        "graph": fileio.subspace_to_json(graph),
        "is_subsystem": graph_is_subsystem(rbo),
    })
    return 0


def cmd_rbo_descendent(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    _emit(fileio.algebra_to_json(descendent_lts(rbo)))
    return 0


def cmd_rbo_nijenhuis(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    lift = nijenhuis_lift(rbo.action, rbo.T)
    ambient = semidirect_product(rbo.action, rbo.weight)
    report = nijenhuis_check(ambient, lift)
    _emit({
        "lift": fileio.matrix_to_json(lift),
        "violations": [v.to_json() for v in report],
        **summarize(report),
    })
    return 1 if report else 0


def cmd_rbo_hom(args) -> int:
    return _report_result(check_rbo_homomorphism(fileio.load_homomorphism(args.homomorphism)))


def cmd_rbo_equivalence(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    result = equivalence_sweep(
        rbo.action, rbo.weight, trials=args.trials, seed=args.seed
    )
    _emit(result)
    return 0 if result["counterexamples"] == 0 else 1


def cmd_coh_group(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    result = cohomology_group(rbo, args.degree)
    data = {
        "degree": result.degree,
        "dim_Z": result.dim_cocycles,
        "dim_B": result.dim_coboundaries,
        "dim_H": result.dim_H,
    }
    if result.sign_convention is not None:
        data["sign_convention"] = result.sign_convention
        data["sign_audit"] = dict(result.sign_audit)
    _emit(data)
    return 0


def cmd_coh_cocycle(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    return _report_result(one_cocycle_check(rbo, fileio.load_cochain(args.cochain)))


def cmd_coh_coboundary(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    f = fileio.load_cochain(args.cochain)
    _emit(fileio.cochain_to_json(coboundary_T(rbo, f)))
    return 0


def cmd_coh_map(args) -> int:
    h = fileio.load_homomorphism(args.homomorphism)
    f = fileio.load_cochain(args.cochain)
    _emit(fileio.cochain_to_json(cochain_map_p(h, f)))
    return 0


def cmd_coh_basis(args) -> int:
    basis = cochain_space_basis(
        args.degree, args.source_dim, args.target_dim,
        allow_degree_5=args.max_degree_override,
    )
    _emit({"degree": args.degree, "dim": basis.dim})
    return 0


def _load_deformation(args) -> InfinitesimalDeformation:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    return InfinitesimalDeformation(rbo, fileio.load_cochain(args.direction))


def cmd_def_check(args) -> int:
    d = _load_deformation(args)
    report = check_deformation(d)
    rules = {v.rule for v in report}
    cocycle_report = one_cocycle_check(d.base, d.direction)
    data = {
        "order_t": "order-t" not in rules,
        "order_t2": "order-t2" not in rules,
        "order_t3": "order-t3" not in rules,
        "cocycle": not cocycle_report,
        "violations": [v.to_json() for v in report],
    }
    if not cocycle_report:
        _, coords = deformation_cocycle_class(d)
        data["class"] = [format_scalar(x) for x in coords]
    else:
        data["class"] = None
    witness = is_trivial_deformation(d, strict=args.strict) if not report else None
    data["trivial_witness"] = (
        [format_scalar(x) for x in witness.wedge.coeffs] if witness else None
    )
    _emit(data)
    return 1 if report else 0


def cmd_def_class(args) -> int:
    d = _load_deformation(args)
    _, coords = deformation_cocycle_class(d)
    _emit({"class": [format_scalar(x) for x in coords]})
    return 0


def cmd_def_equiv(args) -> int:
    rbo = _with_weight(fileio.load_rbo(args.operator), args)
    d1 = InfinitesimalDeformation(rbo, fileio.load_cochain(args.direction1))
    d2 = InfinitesimalDeformation(rbo, fileio.load_cochain(args.direction2))
    if args.witness:
        w = EquivalenceWitness(fileio.load_cochain(args.witness))
        return _report_result(check_equivalence(d1, d2, w, strict=args.strict))
    w = find_equivalence_witness(d1, d2, strict=args.strict)
    _emit({
        "equivalent": w is not None,
        "witness": [format_scalar(x) for x in w.wedge.coeffs] if w else None,
    })
    return 0


def cmd_def_trivial(args) -> int:
    d = _load_deformation(args)
    w = is_trivial_deformation(d, strict=args.strict)
    _emit({
        "trivial": w is not None,
        "witness": [format_scalar(x) for x in w.wedge.coeffs] if w else None,
    })
    return 0


def cmd_fixtures_list(_args) -> int:
    _emit({"fixtures": list_fixtures()})
    return 0


def cmd_fixtures_path(args) -> int:
    _emit({"name": args.name, "path": str(fixture_path(args.name))})
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triplekit",
        description="exact computations with Lie triple systems and relative Rota-Baxter operators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lts = parser_group(sub, "lts", "structure-constant systems")
    p = lts.add_parser("verify")
    p.add_argument("algebra")
    p.set_defaults(handler=cmd_lts_verify)
    p = lts.add_parser("center")
    p.add_argument("algebra")
    p.set_defaults(handler=cmd_lts_center)
    p = lts.add_parser("derived")
    p.add_argument("algebra")
    p.set_defaults(handler=cmd_lts_derived)
    p = lts.add_parser("subsystem")
    p.add_argument("algebra")
    p.add_argument("span")
    p.set_defaults(handler=cmd_lts_subsystem)

    rep = parser_group(sub, "rep", "representations and actions")
    p = rep.add_parser("verify")
    p.add_argument("representation")
    p.set_defaults(handler=cmd_rep_verify)
    p = rep.add_parser("adjoint")
    p.add_argument("algebra")
    p.set_defaults(handler=cmd_rep_adjoint)
    p = rep.add_parser("action")
    p.add_argument("action")
    p.set_defaults(handler=cmd_rep_action)

    sd = parser_group(sub, "sd", "semidirect products")
    p = sd.add_parser("build")
    p.add_argument("action")
    p.add_argument("--weight", required=True)
    p.set_defaults(handler=cmd_sd_build)

    rbo = parser_group(sub, "rbo", "relative Rota-Baxter operators")
    p = rbo.add_parser("check")
    p.add_argument("operator")
    p.add_argument("--weight")
    p.add_argument("--all-weights", action="store_true")
    p.set_defaults(handler=cmd_rbo_check)
    p = rbo.add_parser("graph")
    p.add_argument("operator")
    p.add_argument("--weight")
    p.set_defaults(handler=cmd_rbo_graph)
    p = rbo.add_parser("descendent")
    p.add_argument("operator")
    p.add_argument("--weight")
    p.set_defaults(handler=cmd_rbo_descendent)
    p = rbo.add_parser("nijenhuis")
    p.add_argument("operator")
    p.add_argument("--weight")
    p.set_defaults(handler=cmd_rbo_nijenhuis)
    p = rbo.add_parser("hom")
    p.add_argument("homomorphism")
    p.set_defaults(handler=cmd_rbo_hom)
    p = rbo.add_parser("equivalence")
    p.add_argument("operator")
    p.add_argument("--weight")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=20260808)
    p.set_defaults(handler=cmd_rbo_equivalence)

    coh = parser_group(sub, "coh", "operator cohomology")
    p = coh.add_parser("group")
    p.add_argument("operator")
    p.add_argument("--weight")
    p.add_argument("--degree", type=int, required=True, choices=(1, 3))
    p.set_defaults(handler=cmd_coh_group)
    p = coh.add_parser("cocycle")
    p.add_argument("operator")
    p.add_argument("cochain")
    p.add_argument("--weight")
    p.set_defaults(handler=cmd_coh_cocycle)
    p = coh.add_parser("coboundary")
    p.add_argument("operator")
    p.add_argument("cochain")
    p.add_argument("--weight")
    p.set_defaults(handler=cmd_coh_coboundary)
    p = coh.add_parser("map")
    p.add_argument("homomorphism")
    p.add_argument("cochain")
    p.set_defaults(handler=cmd_coh_map)
    p = coh.add_parser("basis")
    p.add_argument("--degree", type=int, required=True, choices=(-1, 1, 3, 5))
    p.add_argument("--source-dim", type=int, required=True)
    p.add_argument("--target-dim", type=int, required=True)
    p.add_argument("--max-degree-override", action="store_true")
    p.set_defaults(handler=cmd_coh_basis)

    deff = parser_group(sub, "def", "infinitesimal deformations")
    p = deff.add_parser("check")
    p.add_argument("operator")
    p.add_argument("direction")
    p.add_argument("--weight")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(handler=cmd_def_check)
    p = deff.add_parser("class")
    p.add_argument("operator")
    p.add_argument("direction")
    p.add_argument("--weight")
    p.set_defaults(handler=cmd_def_class)
    p = deff.add_parser("equiv")
    p.add_argument("operator")
    p.add_argument("direction1")
    p.add_argument("direction2")
    p.add_argument("--witness")
    p.add_argument("--weight")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(handler=cmd_def_equiv)
    p = deff.add_parser("trivial")
    p.add_argument("operator")
    p.add_argument("direction")
    p.add_argument("--weight")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(handler=cmd_def_trivial)

    fx = parser_group(sub, "fixtures", "bundled examples")
    p = fx.add_parser("list")
    p.set_defaults(handler=cmd_fixtures_list)
    p = fx.add_parser("path")
    p.add_argument("name")
    p.set_defaults(handler=cmd_fixtures_path)

    return parser


def parser_group(sub, name, help_text):
    return sub.add_parser(name, help=help_text).add_subparsers(
        dest="subcommand", required=True
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except VerificationError as exc:
        _emit({"error": str(exc), "kind": "verification"})
        return 1
    except StructureError as exc:
        _emit({"error": str(exc), "kind": "input"})
        return 2
    except (OSError, ValueError) as exc:
        _emit({"error": str(exc), "kind": "input"})
        return 2


if __name__ == "__main__":
    sys.exit(main())
