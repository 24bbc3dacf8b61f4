#!/usr/bin/env python3
"""symcomb command-line interface."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from rich.console import Console
from rich.table import Table

from config.settings import settings
from symcomb import __version__
from symcomb.covers import (
    abar_dimension_from_depth,
    classify_cover,
    enumerate_basic_covers,
    estimate_dim_abar,
    hf_abar,
    reduce_to_basic,
    solve_good_weight,
    veronese_generation_check,
)
from symcomb.exceptions import InputFormatError, PreconditionError, ResourceCapExceeded, SymcombError
from symcomb.groebner import (
    buchberger,
    deformation_connectedness_report,
    flat_family_check,
    ideal_membership,
    initial_ideal,
    radical_membership,
    verify_ara_minors2xn,
    weight_representing_order,
)
from symcomb.homalg import betti_table, invariants_of_monomial
from symcomb.minors import (
    check_hf_At,
    enumerate_hpi,
    hf_At,
    random_integer_matrix,
    regularity_and_a_invariant,
    relation_degree_bounds,
    render_bidiagram,
    sagbi_degree_bound,
    shape_relations,
    tensor_sum_rule,
    verify_det_relations,
)
from symcomb.models import BiDiagram, MinorsParams, MonomialIdeal, Polynomial, Report, TermOrder, WeightedComplex
from symcomb.monomial import minimal_primes, power, prime_power, symbolic_power
from symcomb.polar import (
    ass_primes_prime_power,
    ass_primes_weighted,
    cm_obstruction_check,
    indexed_min_primes,
    polarize,
)
from symcomb.simplicial import (
    connectivity_degree,
    dimension,
    dual,
    is_matroid,
    is_pure,
    is_strongly_connected,
    stanley_reisner_primes,
    symmetric_exchange_holds,
)
from symcomb.utils import (
    load_complex,
    load_ideal,
    load_polynomials,
    load_weighted_complex,
    parse_int_list,
    set_log_level,
    setup_logger,
    write_output,
)

console = Console()
logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true", help="Render a table instead of JSON")
    common.add_argument("--output", dest="output_file", help="Write the report to a file")
    common.add_argument("--seed", type=int, default=settings.default_seed)
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(
        description="Experiments on Stanley-Reisner rings, cover ideals, minors and Gröbner deformations."
    )
    subparsers = parser.add_subparsers(dest="command")

    subparsers.add_parser("version", help="Show version info")

    complex_parser = subparsers.add_parser("complex", parents=[common], help="Simplicial complex checks")
    complex_parser.add_argument("--file", required=True, help="JSON complex {n, facets}")
    complex_parser.add_argument("--matroid", action="store_true")
    complex_parser.add_argument("--symmetric-exchange", action="store_true")
    complex_parser.add_argument("--dual", action="store_true")
    complex_parser.add_argument("--connectivity", action="store_true")
    complex_parser.add_argument("--projective", action="store_true")
    complex_parser.add_argument("--strong", action="store_true", help="Strong connectedness of the facet graph")

    ideal_parser = subparsers.add_parser("ideal", parents=[common], help="Monomial ideal invariants")
    source = ideal_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="JSON monomial ideal")
    source.add_argument("--cover", help="JSON complex whose cover ideal is used")
    source.add_argument("--prime", help="Comma-separated variables of a prime ideal")
    ideal_parser.add_argument("--weights", help="Facet weights for --cover, aligned with the sorted facets")
    ideal_parser.add_argument("-n", type=int, help="Ambient variable count for --prime")
    ideal_parser.add_argument("--symbolic", type=int, help="Symbolic power of the cover ideal")
    ideal_parser.add_argument("--power", type=int, help="Ordinary power")
    ideal_parser.add_argument("--depth", action="store_true")
    ideal_parser.add_argument("--cm", action="store_true")
    ideal_parser.add_argument("--reg", action="store_true")
    ideal_parser.add_argument("--betti", action="store_true")
    ideal_parser.add_argument("--primes", action="store_true", help="Minimal primes")
    ideal_parser.add_argument("--polarize", action="store_true")
    ideal_parser.add_argument("--ass-polar", action="store_true", help="Indexed primes of the polarization")
    ideal_parser.add_argument("--obstruction", action="store_true", help="Localized connectedness test (--cover)")
    ideal_parser.add_argument("--method", choices=["auto", "polarize", "lcm"], default="polarize")
    ideal_parser.add_argument("--field", type=int, help="Coefficient field characteristic, 0 for Q")

    covers_parser = subparsers.add_parser("covers", parents=[common], help="Basic k-covers")
    covers_parser.add_argument("--file", required=True, help="JSON complex, optionally with weights")
    covers_parser.add_argument("--weights", help="Facet weights aligned with the sorted facets")
    covers_parser.add_argument("-k", type=int, default=1)
    covers_parser.add_argument("--classify", help="Comma-separated cover values")
    covers_parser.add_argument("--reduce", help="Comma-separated cover values")
    covers_parser.add_argument("--enumerate", action="store_true")
    covers_parser.add_argument("--hf", action="store_true", help="Number of basic k-covers")
    covers_parser.add_argument("--good-weight", action="store_true")
    covers_parser.add_argument("--veronese", type=int, metavar="H", help="Check (J^(H))^k = J^(Hk)")
    covers_parser.add_argument("--dim-abar", type=int, metavar="KMAX")
    covers_parser.add_argument("--depth-dim", type=int, metavar="KMAX", help="n minus the least depth up to KMAX")

    minors_parser = subparsers.add_parser("minors", parents=[common], help="Algebras of minors")
    minors_parser.add_argument("-m", type=int)
    minors_parser.add_argument("-n", type=int)
    minors_parser.add_argument("-t", type=int)
    minors_parser.add_argument("--reg", action="store_true")
    minors_parser.add_argument("--sagbi", action="store_true")
    minors_parser.add_argument("--bounds", action="store_true", help="Relation degree bounds")
    minors_parser.add_argument("--shape-relations", action="store_true")
    minors_parser.add_argument("--hf", type=int, metavar="D")
    minors_parser.add_argument("--check-hf", type=int, metavar="D", help="Compare with the spanning-set rank")
    minors_parser.add_argument("--sum-rule", type=int, metavar="D")
    minors_parser.add_argument("--hpi", type=int, nargs=2, metavar=("Q", "K"))
    minors_parser.add_argument("--det-relations", action="store_true")
    minors_parser.add_argument("--trials", type=int, default=100)

    groebner_parser = subparsers.add_parser("groebner", parents=[common], help="Gröbner bases and deformations")
    groebner_parser.add_argument("--file", help="One polynomial per line")
    groebner_parser.add_argument("--vars", dest="num_vars", type=int, help="Ambient variable count")
    groebner_parser.add_argument("--order", choices=["lex", "revlex", "degrevlex"], default="degrevlex")
    groebner_parser.add_argument("--weights", help="Weight vector; refines --order")
    groebner_parser.add_argument("--basis", action="store_true")
    groebner_parser.add_argument("--initial", action="store_true")
    groebner_parser.add_argument("--deform-report", action="store_true")
    groebner_parser.add_argument("--flat", action="store_true", help="Flat-family endpoints for --weights")
    groebner_parser.add_argument("--find-weight", action="store_true", help="Weight vector representing --order")
    groebner_parser.add_argument("--member", help="Polynomial to test for ideal membership")
    groebner_parser.add_argument("--radical-member", help="Polynomial to test for radical membership")
    groebner_parser.add_argument("--ara", type=int, metavar="N", help="Antidiagonal equations of the 2x(N+1) minors")

    return parser


def _render_value(value: Any) -> str:
    if isinstance(value, list) and value and all(isinstance(v, BiDiagram) for v in value):
        return "\n\n".join(render_bidiagram(v) for v in value)
    if isinstance(value, (list, tuple)) and value and all(hasattr(v, "to_list") for v in value):
        return "\n".join(str(v) for v in value)
    if hasattr(value, "to_dict"):
        return "\n".join(f"{k}: {v}" for k, v in value.to_dict().items())
    return str(value)


def _display_table(report: Report) -> None:
    table = Table(show_header=True, header_style="bold cyan", title=f"symcomb {report.command}")
    table.add_column("Result", style="bold")
    table.add_column("Value")
    for key, value in report.results.items():
        table.add_row(key, _render_value(value))
    console.print(table)
    if report.provenance:
        console.print("[dim]" + "; ".join(report.provenance) + "[/dim]")


def _display_results(report: Report, as_table: bool, output_file: Optional[str]) -> None:
    if as_table:
        _display_table(report)
    content = report.to_json()
    if output_file:
        write_output(output_file, content)
    elif not as_table:
        sys.stdout.write(content + "\n")


def _weighted(path: str, weights_text: Optional[str]) -> WeightedComplex:
    """Weights on the command line override any stored in the file."""
    weights = parse_int_list(weights_text)
    if weights:
        return WeightedComplex.build(load_complex(path), weights)
    return load_weighted_complex(path)


def _invariants(ideal: MonomialIdeal, args: argparse.Namespace):
    return invariants_of_monomial(ideal, field_char=args.field, method=args.method)


def cmd_complex(args: argparse.Namespace) -> Report:
    complex_ = load_complex(args.file)
    report = Report("complex", inputs={"file": args.file, "complex": complex_}, seed=args.seed)
    report.add("dimension", dimension(complex_))
    report.add("pure", is_pure(complex_))
    if args.matroid:
        ok, witness = is_matroid(complex_)
        report.add("is_matroid", ok, cites="basis exchange axiom")
        report.add("witness", witness)
    if args.symmetric_exchange:
        ok, witness = symmetric_exchange_holds(complex_)
        report.add("symmetric_exchange", ok, cites="symmetric basis exchange")
        report.add("symmetric_witness", witness)
    if args.dual:
        other = dual(complex_)
        report.add("dual", other, cites="facet-complement duality")
        report.add("self_dual", other == complex_)
    if args.connectivity:
        primes = stanley_reisner_primes(complex_)
        report.add(
            "connectivity",
            connectivity_degree(primes, complex_.n, projective=args.projective),
            cites="connectedness of unions of coordinate subspaces",
        )
    if args.strong:
        report.add(
            "strongly_connected",
            is_pure(complex_) and is_strongly_connected(complex_),
            cites="codimension-one connectedness equals strong connectedness",
        )
    return report


def _ideal_source(args: argparse.Namespace, report: Report):
    """The ideal to analyse, plus the weighted complex or prime when there is one."""
    if args.cover:
        wc = _weighted(args.cover, args.weights)
        k = args.symbolic or 1
        report.inputs.update({"cover": args.cover, "weighted_complex": wc, "symbolic": k})
        return symbolic_power(wc, k=k), wc, None
    if args.prime:
        variables = parse_int_list(args.prime)
        if not variables:
            raise InputFormatError("--prime needs at least one variable")
        n = args.n or max(variables)
        k = args.power or 1
        report.inputs.update({"prime": variables, "n": n, "power": k})
        return prime_power(variables, k, n), None, variables
    ideal = load_ideal(args.file)
    report.inputs.update({"file": args.file, "power": args.power or 1})
    if args.power:
        ideal = power(ideal, args.power)
    return ideal, None, None


def cmd_ideal(args: argparse.Namespace) -> Report:
    report = Report("ideal", inputs={"method": args.method}, seed=args.seed)
    ideal, wc, prime = _ideal_source(args, report)
    report.add("ideal", ideal)
    if wc is not None:
        report.provenance.append("symbolic powers of cover ideals are intersections of prime powers")
    if args.primes:
        report.add("minimal_primes", minimal_primes(ideal))
    if args.depth or args.cm or args.reg:
        invariants = _invariants(ideal, args)
        cites = "Hochster formula via polarization" if invariants.method == "polarize" else "Betti numbers from the lcm lattice"
        if args.depth:
            report.add("depth", invariants.depth, cites=cites)
            report.add("dim", invariants.dim)
        if args.reg:
            report.add("reg", invariants.reg, cites=cites)
        if args.cm:
            report.add("is_CM", invariants.is_cm, cites=cites)
            if wc is not None:
                report.provenance.append("cover-ideal powers are Cohen-Macaulay exactly for matroids")
        report.add("route", invariants.method)
    if args.betti:
        table, route = betti_table(ideal, field_char=args.field, method=args.method)
        report.add("betti", table, cites="graded Betti numbers")
        report.add("betti_route", route)
    if args.polarize:
        report.add("polarization", polarize(ideal), cites="polarization preserves Betti numbers")
    if args.ass_polar:
        cites = "associated primes of polarized prime powers"
        if prime is not None:
            primes = ass_primes_prime_power(prime, args.power or 1)
        elif wc is not None:
            primes = ass_primes_weighted(wc, k=args.symbolic or 1)
        else:
            primes = sorted(indexed_min_primes(polarize(ideal)), key=lambda p: (p.base_set, p.levels))
        report.add("ass_polar", primes, cites=cites)
        report.add("ass_polar_count", len(primes))
    if args.obstruction:
        if wc is None:
            raise InputFormatError("--obstruction needs --cover")
        report.add(
            "obstruction",
            cm_obstruction_check(wc, k=args.symbolic or 1),
            cites="localized connectedness of polarized symbolic powers",
        )
    return report


def cmd_covers(args: argparse.Namespace) -> Report:
    wc = _weighted(args.file, args.weights)
    k = args.k
    report = Report("covers", inputs={"file": args.file, "weighted_complex": wc, "k": k}, seed=args.seed)
    cites = "basic k-covers are the minimal generators of the k-th symbolic power"
    if args.classify:
        report.add("class", classify_cover(wc, parse_int_list(args.classify), k), cites=cites)
    if args.reduce:
        report.add("basic", reduce_to_basic(wc, parse_int_list(args.reduce), k), cites=cites)
    if args.enumerate:
        report.add("basic_covers", enumerate_basic_covers(wc, k), cites=cites)
    if args.hf:
        report.add("hf_abar", hf_abar(wc, k), cites="Hilbert function of the algebra of basic covers")
    if args.good_weight:
        report.add("good_weight", solve_good_weight(wc), cites="good weights from vertex weights")
    if args.veronese:
        report.add("veronese", veronese_generation_check(wc, args.veronese, k), cites="Veronese generation")
    if args.dim_abar:
        report.add("dim_abar", estimate_dim_abar(wc, args.dim_abar), cites="growth of the basic-cover count")
    if args.depth_dim:
        report.add("dim_from_depth", abar_dimension_from_depth(wc, args.depth_dim), cites="dimension from the least depth")
    return report


def _params(args: argparse.Namespace) -> MinorsParams:
    if args.m is None or args.n is None or args.t is None:
        raise InputFormatError("this check needs -m, -n and -t")
    return MinorsParams(args.m, args.n, args.t)


def cmd_minors(args: argparse.Namespace) -> Report:
    inputs = {key: getattr(args, key) for key in ("m", "n", "t") if getattr(args, key) is not None}
    report = Report("minors", inputs=inputs, seed=args.seed)
    if args.reg:
        report.add("regularity", regularity_and_a_invariant(_params(args)), cites="a-invariant of the algebra of minors")
    if args.sagbi:
        if args.m is None or args.t is None:
            raise InputFormatError("--sagbi needs -m and -t")
        report.add("sagbi_degree_bound", sagbi_degree_bound(args.m, args.t), cites="primitive partition identities")
    if args.bounds:
        report.add("relation_bounds", relation_degree_bounds(_params(args)), cites="stabilization of relations in the column count")
    if args.shape_relations:
        report.add("shape_relations", shape_relations(_params(args)), cites="degree-3 shape relations")
    if args.hf is not None:
        report.add("hf", hf_At(_params(args), args.hf), cites="Cauchy decomposition")
    if args.check_hf is not None:
        report.add("hf_checked", check_hf_At(_params(args), args.check_hf), cites="Cauchy decomposition")
    if args.sum_rule is not None:
        lhs, rhs = tensor_sum_rule(_params(args), args.sum_rule)
        report.add("sum_rule", {"weighted_sum": lhs, "tensor_dimension": rhs, "holds": lhs == rhs}, cites="Pieri rule")
    if args.hpi:
        if args.t is None:
            raise InputFormatError("--hpi needs -t")
        q, k = args.hpi
        report.inputs["hpi"] = [q, k]
        report.add("hpi", enumerate_hpi(q, args.t, k), cites="homogeneous primitive partition identities")
    if args.det_relations:
        if args.t is None:
            raise InputFormatError("--det-relations needs -t")
        rows = args.m or args.t + 2
        cols = args.n or args.t + 2
        report.inputs["trials"] = args.trials
        failures = [
            trial
            for trial in range(args.trials)
            if not verify_det_relations(args.t, random_integer_matrix(rows, cols, seed=args.seed + trial))
        ]
        report.add("det_relations_hold", not failures, cites="Plücker and determinantal relations")
        report.add("failed_trials", failures)
    return report


def _order(args: argparse.Namespace, n: int) -> TermOrder:
    weights = parse_int_list(args.weights)
    if weights:
        return TermOrder.weighted(weights, "lex" if args.order in ("lex", "revlex") else "degrevlex")
    if args.order == "lex":
        return TermOrder.lex(n)
    if args.order == "revlex":
        return TermOrder.lex(n).reversed()
    return TermOrder.degrevlex(n)


def cmd_groebner(args: argparse.Namespace) -> Report:
    report = Report("groebner", inputs={"order": args.order}, seed=args.seed)
    if args.ara is not None:
        report.inputs["ara"] = args.ara
        report.add("ara_equations", verify_ara_minors2xn(args.ara), cites="antidiagonal equations for 2-minors")
    if not args.file:
        if args.ara is None:
            raise InputFormatError("--file is required unless --ara is given")
        return report

    n, gens = load_polynomials(args.file, args.num_vars)
    order = _order(args, n)
    report.inputs.update({"file": args.file, "n": n, "term_order": order, "generators": [g.to_text() for g in gens]})
    if args.basis or args.member:
        basis = buchberger(gens, order)
        if args.basis:
            report.add("basis", basis, cites="Buchberger criterion")
        if args.member:
            f = Polynomial.parse(args.member, n)
            report.add("member", ideal_membership(f, basis))
    if args.initial:
        report.add("initial_ideal", initial_ideal(gens, order))
    if args.radical_member:
        report.add("radical_member", radical_membership(Polynomial.parse(args.radical_member, n), gens))
    if args.deform_report:
        report.add(
            "deformation",
            deformation_connectedness_report(gens, order),
            cites="Gröbner deformation preserves connectedness in codimension one",
        )
    if args.flat:
        if not args.weights:
            raise InputFormatError("--flat needs --weights")
        report.add("flat_family", flat_family_check(gens, parse_int_list(args.weights)), cites="flat family to the initial ideal")
    if args.find_weight:
        report.add("representing_weight", weight_representing_order(gens, order))
    return report


COMMANDS: Dict[str, Callable[[argparse.Namespace], Report]] = {
    "complex": cmd_complex,
    "ideal": cmd_ideal,
    "covers": cmd_covers,
    "minors": cmd_minors,
    "groebner": cmd_groebner,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_OK

    if getattr(args, "verbose", False):
        set_log_level(logging.DEBUG)
        logger.debug("verbose logging on")

    if args.command == "version":
        console.print(f"symcomb {__version__}")
        return EXIT_OK

    try:
        report = COMMANDS[args.command](args)
        _display_results(report, args.table, args.output_file)
        return EXIT_OK
    except InputFormatError as exc:
        console.print(f"[red]Input error:[/red] {exc}")
        return EXIT_PARSE
    except PreconditionError as exc:
        console.print(f"[red]Out of range:[/red] {exc}")
        return EXIT_PRECONDITION
    except ResourceCapExceeded as exc:
        console.print(f"[yellow]Resource cap:[/yellow] {exc}")
        return EXIT_RESOURCE
    except SymcombError as exc:
        logger.error("Consistency check failed: %s", exc)
        console.print(f"[red]Error:[/red] {exc}")
        return EXIT_FAILURE
    except ValueError as exc:
        console.print(f"[red]Invalid input:[/red] {exc}")
        return EXIT_PARSE
    except KeyboardInterrupt:
        console.print("\n[yellow]Cancelled by user.[/yellow]")
        return 130
    except Exception as exc:  # pragma: no cover - top-level fail-safe
        logger.exception("Unhandled CLI error")
        if getattr(args, "verbose", False):
            raise
        console.print(f"[red]Error:[/red] {exc}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
