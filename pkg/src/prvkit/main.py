"""Main entry point for prvkit."""

import logging
import sys
from argparse import ArgumentParser
from typing import List, Optional

import argcomplete  # type: ignore

from prvkit.commands.lattice import cmd_distance, cmd_membership, cmd_orbit_dim
from prvkit.commands.prv import cmd_dim_identity, cmd_kostant, cmd_pairs, cmd_prv, cmd_refined
from prvkit.commands.rep import cmd_info, cmd_invariants, cmd_multiplicity, cmd_tensor
from prvkit.commands.sweep import cmd_sweep
from prvkit.commands.transfer import cmd_saturate, cmd_search, cmd_transfer
from prvkit.prv.sweep import SUITES
from prvkit.utils.inputs import BASES, FUNDAMENTAL
from prvkit.utils.logging import ExitException, configure_logging, error
from prvkit.utils.types import FORMS, LOGLEVELS, SIMPLY_CONNECTED


def _add_datum_args(parser, required: bool = True):
    parser.add_argument("--type", required=required, help="Type label such as A2, B3xT1 or G2")
    parser.add_argument("--form", default=SIMPLY_CONNECTED, choices=FORMS[:2], help="Lattice of the datum")
    _add_basis_arg(parser)


def _add_basis_arg(parser):
    parser.add_argument(
        "--basis", default=FUNDAMENTAL, choices=BASES,
        help="Coordinates of (co)weight arguments: Dynkin labels, simple (co)root coefficients or lattice",
    )


def _add_instance_args(parser, required: bool = True):
    parser.add_argument("--lambda", dest="lam", required=required, help="Dominant weight λ, e.g. 1,0")
    parser.add_argument("--mu", required=required, help="Dominant weight μ")
    parser.add_argument("--w", default="e", help="Weyl group element as a word, e.g. 's1 s2' or e")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(description="Check the PRV statement and its refinement on explicit root data")
    parser.add_argument(
        "--log-level", default="info", choices=LOGLEVELS.keys(),
        help="Set the log level",
    )
    parser.add_argument(
        "--color", default="auto", choices=["always", "auto", "never"],
        help="Colorize output and error",
    )
    parser.add_argument("--json", action="store_true", help="Print one JSON object instead of a tree")

    subparsers = parser.add_subparsers(required=True, dest="command")
    _setup_rep_subcommands(subparsers)
    _setup_prv_subcommands(subparsers)
    _setup_lattice_subcommands(subparsers)
    _setup_transfer_subcommands(subparsers)

    # sweep
    sweep_parser = subparsers.add_parser("sweep", help="Run an exhaustive verification suite")
    sweep_parser.add_argument("--suite", required=True, choices=sorted(SUITES), help="Suite to run")
    sweep_parser.add_argument("--types", help="Comma-separated type labels (default depends on the suite)")
    sweep_parser.add_argument("--bound", type=int, help="Largest Dynkin label (or coordinate) in the box")
    sweep_parser.add_argument("--jobs", "-j", type=int, help="Worker processes")
    sweep_parser.set_defaults(func=cmd_sweep)
    return parser


def _setup_rep_subcommands(subparsers):
    """Setup representation subcommands."""
    info_parser = subparsers.add_parser("info", help="Print a root datum")
    _add_datum_args(info_parser)
    info_parser.add_argument("--roots", action="store_true", help="List the positive roots and coroots")
    info_parser.set_defaults(func=cmd_info)

    tensor_parser = subparsers.add_parser("tensor", help="Decompose V(λ)⊗V(μ)")
    _add_datum_args(tensor_parser)
    tensor_parser.add_argument("--lambda", dest="lam", required=True, help="Dominant weight λ")
    tensor_parser.add_argument("--mu", required=True, help="Dominant weight μ")
    tensor_parser.add_argument("--nu", help="Report the multiplicity of V(ν)")
    tensor_parser.add_argument("--check-oracle", action="store_true", help="Compare with the character product")
    tensor_parser.set_defaults(func=cmd_tensor)

    invariants_parser = subparsers.add_parser("invariants", help="dim (V(λ₁)⊗···⊗V(λ_s))^G")
    _add_datum_args(invariants_parser)
    invariants_parser.add_argument("--weight", action="append", required=True, help="Dominant weight; repeat")
    invariants_parser.set_defaults(func=cmd_invariants)

    multiplicity_parser = subparsers.add_parser("multiplicity", help="Weight multiplicity, Freudenthal vs Kostant")
    _add_datum_args(multiplicity_parser)
    multiplicity_parser.add_argument("--lambda", dest="lam", required=True, help="Dominant weight λ")
    multiplicity_parser.add_argument("--weight", required=True, help="Weight whose multiplicity in V(λ) is wanted")
    multiplicity_parser.set_defaults(func=cmd_multiplicity)


def _setup_prv_subcommands(subparsers):
    """Setup PRV subcommands."""
    for name, func, text in (
        ("prv", cmd_prv, "Check the PRV statement for (λ, μ, w)"),
        ("refined", cmd_refined, "Check dim ≥ m_{λ,μ,w} ≥ 1"),
        ("kostant", cmd_kostant, "Check multiplicity one of V(λ+wμ) when it is dominant"),
        ("dim-identity", cmd_dim_identity, "Compare ⟨λ+μ+ν, ρ∨⟩ with the stabilizer valuation sum"),
    ):
        sub = subparsers.add_parser(name, help=text)
        _add_datum_args(sub)
        _add_instance_args(sub)
        sub.set_defaults(func=func)
        if name == "dim-identity":
            sub.add_argument("--valuations", action="store_true", help="List the valuation of every coroot")

    pairs_parser = subparsers.add_parser("pairs", help="Every (w, v) with ν = v(−λ−wμ)")
    _add_datum_args(pairs_parser)
    pairs_parser.add_argument("--lambda", dest="lam", required=True, help="Dominant weight λ")
    pairs_parser.add_argument("--mu", required=True, help="Dominant weight μ")
    pairs_parser.add_argument("--nu", required=True, help="Dominant weight ν")
    pairs_parser.set_defaults(func=cmd_pairs)


def _setup_lattice_subcommands(subparsers):
    """Setup affine Grassmannian subcommands."""
    orbit_parser = subparsers.add_parser("orbit-dim", help="Dimension of the SL_m(𝒪)-orbit of lattices")
    orbit_parser.add_argument(
        "--paper-sl2-example", "--sl2-example", dest="sl2_example", action="store_true",
        help="Reproduce the SL_2 point ([α∨], ȳ, [0]) and all its checks",
    )
    _add_datum_args(orbit_parser, required=False)
    _add_instance_args(orbit_parser, required=False)
    orbit_parser.add_argument(
        "--point", action="append", help="Lattice: coroot coordinates, a matrix '[[t,1],[0,t^-1]]' or @file"
    )
    orbit_parser.add_argument("--truncation", "-N", type=int, help="Truncation order N")
    orbit_parser.set_defaults(func=cmd_orbit_dim)

    distance_parser = subparsers.add_parser("distance", help="Chevalley distance d(L1, L2)")
    distance_parser.add_argument("first", help="Lattice L1")
    distance_parser.add_argument("second", help="Lattice L2")
    distance_parser.set_defaults(func=cmd_distance)

    membership_parser = subparsers.add_parser("membership", help="Membership in a cyclic convolution variety")
    membership_parser.add_argument("--point", action="append", required=True, help="Lattice L_i; repeat")
    membership_parser.add_argument("--target", action="append", required=True,
                                   help="Target coweight in coroot coordinates; repeat")
    membership_parser.set_defaults(func=cmd_membership)


def _setup_transfer_subcommands(subparsers):
    """Setup transfer subcommands."""
    preset_help = "torus:<type>[:<form>], sl2-root:<type>:<i>[:reversed] or custom:<json>"

    transfer_parser = subparsers.add_parser("transfer", help="Transfer coweights and compare invariants")
    transfer_parser.add_argument("--preset", required=True, help=preset_help)
    transfer_parser.add_argument("--coweight", action="append", required=True, help="Dominant coweight of H; repeat")
    _add_basis_arg(transfer_parser)
    transfer_parser.set_defaults(func=cmd_transfer)

    search_parser = subparsers.add_parser("search", help="Search a box for failures of the implication")
    search_parser.add_argument("--preset", required=True, help=preset_help)
    search_parser.add_argument("--bound", type=int, default=10, help="Coordinate bound of the box")
    search_parser.add_argument("--length", "-s", type=int, default=3, help="Tuple length")
    search_parser.add_argument("--n-max", type=int, default=10, help="Largest scaling tried for failures")
    search_parser.add_argument("--jobs", "-j", type=int, help="Worker processes")
    search_parser.set_defaults(func=cmd_search)

    saturate_parser = subparsers.add_parser("saturate", help="Least scaling that restores invariants")
    saturate_parser.add_argument("--preset", required=True, help=preset_help)
    saturate_parser.add_argument("--coweight", action="append", required=True, help="Dominant coweight of H; repeat")
    saturate_parser.add_argument("--n-max", type=int, default=10, help="Largest scaling tried")
    _add_basis_arg(saturate_parser)
    saturate_parser.set_defaults(func=cmd_saturate)


def main(argv: Optional[List[str]] = None):
    """Main entry point for prvkit."""
    configure_logging(logging.INFO)
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser()
        argcomplete.autocomplete(parser)
        args = parser.parse_args(argv)
        configure_logging(LOGLEVELS[args.log_level], args.color)
        args.replay = [a for a in argv if a != "--json"]
        args.func(args)
    except ExitException as e:
        error("{}", e.args[0])
        sys.exit(e.exit_code)
