"""
Argument parser for the factorization toolkit CLI
"""

import argparse

KIND_CHOICES = ("ns", "affine", "puiseux", "block")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="emit the JSON report")
    output.add_argument("--csv", action="store_true", help="emit the n,ld_num,ld_den series")
    common.add_argument("--bound", type=positive_int, help="scan bound for monoid-wide searches")
    common.add_argument("--budget", type=positive_int, help="node-expansion budget")
    common.add_argument("--workers", type=positive_int, help="worker threads for scans")
    common.add_argument("--element", help="element to analyse, in the monoid's grammar")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="factorkit",
        description="Exact factorization invariants of commutative monoids",
    )
    parser.add_argument(
        "--print-schema", action="store_true", help="print the JSON schema of the report and exit"
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    for name, help_text, spec_help in (
        ("ns", "numerical semigroup", "generators, e.g. 6,9,20"),
        ("affine", "affine semigroup", "generators, e.g. '(4,0);(7,0);(0,3)'"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("spec", help=spec_help)

    block = sub.add_parser("block", parents=[common], help="block monoid B(G) or B(G,S)")
    block.add_argument("spec", help="group, e.g. Z5 or Z2xZ2xZ2")
    block.add_argument("--restrict", help="subset S as residue vectors, e.g. '(1);(4)'")

    puiseux = sub.add_parser("puiseux", parents=[common], help="finitely generated Puiseux monoid")
    puiseux.add_argument("spec", nargs="?", help="atoms, e.g. 4/3,8/5,800/1201")
    puiseux.add_argument("--level", type=int, help="built-in monoid without asymptotic length density")
    puiseux.add_argument("--series", help="checkpoints n for ld(n*x), e.g. 99,100,2900")

    mabc = sub.add_parser("mabc", parents=[common], help="truncation of the M(a,b,c) family")
    mabc.add_argument("a", type=positive_int)
    mabc.add_argument("b", type=positive_int)
    mabc.add_argument("c", help="rational in [0,1], e.g. 1/2")
    mabc.add_argument("--truncation", type=positive_int, help="number of chains kept (default: index)")
    mabc.add_argument("--index", type=positive_int, default=1, help="chain index i")
    mabc.add_argument("--power", type=positive_int, default=1, help="power t of q_{i,ia}^(ia)")

    chain = sub.add_parser("chain", parents=[common], help="chain monoid a_1^3 = a_2^4 = ... = a_i^(2i)")
    chain.add_argument("index", type=int)

    infdelta = sub.add_parser("infdelta", parents=[common], help="member <2i,3i,6i+1> of the infinite-delta family")
    infdelta.add_argument("index", type=int)

    for name, help_text in (
        ("search", "delta scan and minimum length density"),
        ("betti", "Betti elements and the length-density test"),
        ("catenary", "catenary and tame degree of an element"),
        ("asym", "length densities of the powers of an element"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("kind", choices=KIND_CHOICES)
        cmd.add_argument("spec")
        cmd.add_argument("--restrict", help="block subset S, e.g. '(1);(4)'")
        if name == "catenary":
            cmd.add_argument("--tame", help="factorization x for the tame degree, e.g. '(0,0,1)'")
        if name == "asym":
            cmd.add_argument("--terms", type=positive_int, help="number of powers")
            cmd.add_argument("--tol", help="convergence tolerance, e.g. 1/10")

    return parser
