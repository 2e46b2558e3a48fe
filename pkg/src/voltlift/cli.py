"""``voltlift`` command line.

Every analysis command reads a voltage digraph file (see
:mod:`voltlift.fileformat`) from ``--input`` or stdin, so catalog output
can be piped straight in::

    voltlift catalog alegre | voltlift spectrum --method both
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import catalog
from .digraph import DigraphError, VertexPartition, format_coordinate
from .digraph import is_regular_partition, quotient_counts
from .fileformat import ParseError, format_voltage_file, parse, parse_group
from .group import GroupError
from .polymat import NumericalResidualError, eccentricities, from_voltage
from .polymat import power, power_via_dft, render
from .spectra import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_COMPARE_TOL,
    EigenvalueConvergenceError,
    SizeGuardError,
    direct_spectrum,
    lift_spectrum,
    multiset_distance,
    multiset_equal,
)
from .voltage import VoltageDigraph, fiber_quotient, lift

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESIDUAL = 3
EXIT_EIGEN = 4
EXIT_SIZE = 5
EXIT_MISMATCH = 6


class CommandError(Exception):
    def __init__(self, msg: str, code: int = EXIT_INPUT):
        super().__init__(msg)
        self.code = code


def fmt_real(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s in ("-0", "0") else s


def fmt_complex_parts(z: complex, zero_tol: float = 1e-12) -> tuple[str, str]:
    re = 0.0 if abs(z.real) <= zero_tol else z.real
    im = 0.0 if abs(z.imag) <= zero_tol else z.imag
    return fmt_real(re), fmt_real(im)


def format_spectrum(clusters, tol: float) -> str:
    lines = [f"# tol={tol:g}"]
    for value, mult in clusters:
        re, im = fmt_complex_parts(value)
        lines.append(f"{re} {im} {mult}")
    return "\n".join(lines) + "\n"


def _read_input(args) -> VoltageDigraph:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return parse(text)


def _matrix_lines(matrix, labels) -> str:
    rows = [f"{label} " + " ".join(str(int(x)) for x in row) for label, row in zip(labels, matrix)]
    return "\n".join(rows) + "\n"


def cmd_lift(args, out):
    vd = _read_input(args)
    out.write(format_coordinate(lift(vd).digraph.adjacency()))


def cmd_spectrum(args, out):
    vd = _read_input(args)
    route = "numeric" if args.numeric else "exact"
    if args.method == "poly":
        spec = lift_spectrum(vd, route)
    elif args.method == "direct":
        spec = direct_spectrum(vd, route, max_order=args.max_order)
    else:
        spec = lift_spectrum(vd, route)
        other = direct_spectrum(vd, route, max_order=args.max_order)
        dist = multiset_distance(spec, other)
        out.write(format_spectrum(spec.clustered(args.tol), args.tol))
        out.write(f"# distance={dist:.3e}\n")
        if not multiset_equal(spec, other, args.compare_tol):
            raise CommandError(
                f"spectra differ: distance {dist:.3e} exceeds {args.compare_tol:g}",
                EXIT_MISMATCH,
            )
        return
    out.write(format_spectrum(spec.clustered(args.tol), args.tol))


def cmd_quotient(args, out):
    vd = _read_input(args)
    out.write(_matrix_lines(fiber_quotient(vd), vd.base.labels))


def _parse_blocks(text: str, names: Sequence[str]) -> list[list[int]]:
    index = {name: i for i, name in enumerate(names)}
    blocks = []
    for chunk in text.split(";"):
        block = []
        for tok in chunk.split():
            if tok in index:
                block.append(index[tok])
            elif tok.isdigit() and int(tok) < len(names):
                block.append(int(tok))
            else:
                raise CommandError(f"unknown lift vertex {tok!r} in --blocks")
        blocks.append(block)
    return blocks


def cmd_check_regular(args, out):
    vd = _read_input(args)
    d = lift(vd).digraph
    if args.blocks == "fibers":
        r, m = vd.r, vd.group.order
        blocks = [[g * r + u for g in range(m)] for u in range(r)]
    else:
        blocks = _parse_blocks(args.blocks.replace(",", " "), d.labels)
    partition = VertexPartition(blocks, d.n)
    if is_regular_partition(d, partition):
        out.write("regular\n")
        names = [str(i) for i in range(len(blocks))]
        out.write(_matrix_lines(quotient_counts(d, partition), names))
    else:
        out.write("not regular\n")


def cmd_walks(args, out):
    vd = _read_input(args)
    b = from_voltage(vd)
    if args.dft:
        p = power_via_dft(b, args.len)
    else:
        p = power(b, args.len)
    if (args.source is None) != (args.target is None):
        raise CommandError("--from and --to must be given together")
    if args.source is None:
        out.write(render(p, vd.base.labels))
        return
    u, v = vd.base.vertex(args.source), vd.base.vertex(args.target)
    coeffs = " ".join(str(int(c)) for c in p.coeffs[u, v])
    out.write(f"{coeffs}\n")


def cmd_diameter(args, out):
    vd = _read_input(args)
    ecc = eccentricities(from_voltage(vd))
    if (ecc < 0).any():
        raise CommandError("lift is not strongly connected")
    out.write(f"{int(ecc.max())}\n")


def cmd_polymatrix(args, out):
    vd = _read_input(args)
    b = from_voltage(vd)
    if args.power != 1:
        b = power(b, args.power)
    out.write(render(b, vd.base.labels))


def _coeff_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t != ""]
    except ValueError:
        raise CommandError(f"malformed coefficient list {text!r}") from None


def _catalog_entry(args) -> VoltageDigraph:
    name, rest = args.name, args.params
    try:
        if name == "alegre":
            _no_params(name, rest)
            return catalog.alegre()
        if name == "hoffman-singleton":
            _no_params(name, rest)
            return catalog.hoffman_singleton()
        if name == "petersen":
            n, k = _int_params(name, rest, 2)
            return catalog.generalized_petersen(n, k)
        if name == "pfamily":
            if len(rest) != 3:
                raise CommandError("pfamily takes n p1 p2 (coefficients comma separated)")
            return catalog.p_family(int(rest[0]), _coeff_list(rest[1]), _coeff_list(rest[2]))
        if name == "cayley":
            if not rest or not args.gens:
                raise CommandError("cayley takes a group (cyclic k | product k1 ...) and --gens")
            grp = parse_group(rest)
            gens = [grp.element(grp.parse_element(g)) for g in args.gens]
            return catalog.cayley(grp, gens)
    except (ValueError, TypeError) as exc:
        raise CommandError(str(exc)) from None
    raise CommandError(f"unknown catalog entry {name!r}")


def _no_params(name, rest):
    if rest:
        raise CommandError(f"{name} takes no parameters")


def _int_params(name, rest, count):
    if len(rest) != count:
        raise CommandError(f"{name} takes {count} integer parameters")
    try:
        return [int(x) for x in rest]
    except ValueError:
        raise CommandError(f"{name} parameters must be integers") from None


def cmd_catalog(args, out):
    out.write(format_voltage_file(_catalog_entry(args)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voltlift", description="Lifts of voltage digraphs via polynomial matrices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if name != "catalog":
            p.add_argument("-i", "--input", help="voltage file (default: stdin)")
        return p

    add("lift", cmd_lift, "lift adjacency in coordinate format")

    p = add("spectrum", cmd_spectrum, "lift spectrum as clustered multiset")
    p.add_argument("--method", choices=("poly", "direct", "both"), default="poly")
    p.add_argument("--tol", type=float, default=DEFAULT_CLUSTER_TOL, help="clustering tolerance")
    p.add_argument("--compare-tol", type=float, default=DEFAULT_COMPARE_TOL)
    p.add_argument(
        "--numeric", action="store_true", help="floating point eigensolver instead of exact roots"
    )
    p.add_argument("--max-order", type=int, default=2000, help="size limit for --method direct")

    add("quotient", cmd_quotient, "fiber quotient matrix B(1)")

    p = add("check-regular", cmd_check_regular, "test a partition of the lift for regularity")
    p.add_argument(
        "--blocks",
        required=True,
        help="'fibers' or blocks of lift vertices (labels or indices) separated by ';'",
    )

    p = add("walks", cmd_walks, "walk counts from powers of the polynomial matrix")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")
    p.add_argument("--dft", action="store_true", help="power through the Fourier domain")

    add("diameter", cmd_diameter, "diameter of the lift")

    p = add("polymatrix", cmd_polymatrix, "print the polynomial matrix (or a power)")
    p.add_argument("--power", type=int, default=1)

    p = add("catalog", cmd_catalog, "emit a built-in voltage digraph")
    p.add_argument("name", help="alegre | hoffman-singleton | petersen | pfamily | cayley")
    p.add_argument("params", nargs="*")
    p.add_argument("--gens", nargs="+", help="generators for cayley")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except CommandError as exc:
        code, msg = exc.code, str(exc)
    except NumericalResidualError as exc:
        code, msg = EXIT_RESIDUAL, str(exc)
    except EigenvalueConvergenceError as exc:
        code, msg = EXIT_EIGEN, str(exc).splitlines()[0]
    except SizeGuardError as exc:
        code, msg = EXIT_SIZE, str(exc)
    except (ParseError, GroupError, DigraphError, ValueError, OSError) as exc:
        code, msg = EXIT_INPUT, str(exc)
    else:
        return EXIT_OK
    print(f"voltlift: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
