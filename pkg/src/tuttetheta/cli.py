"""Command-line entry point: ``tuttetheta <subcommand> ...``.

Exit status is 0 on success, 1 for invalid input and 2 when a configured
cap would be exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import codes, lattices, matroids, pipeline, primes, statepoly
from .errors import CapExceeded, DecodeError, FormatError
from .io import dump_json, format_graph, load_json, read_code, read_graph, read_matrix, write_graph
from .poly import Poly

log = logging.getLogger("tuttetheta")


def _emit(args, text: str, payload):
    if args.format == "json":
        sys.stdout.write(dump_json(payload))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_nstate(args):
    g, _ = read_graph(args.graph)
    z = statepoly.z_state_symbolic(g, args.n, cap=args.state_cap)
    poly = z.poly if args.symbolic else statepoly.negami(z)
    if args.json:
        dump_json(poly.to_json(), args.json)
    _emit(args, poly.format(), poly.to_json())


def _weight_matrix(args, g):
    if args.matrix == "paper":
        if args.n is None:
            raise ValueError("--matrix paper needs --n")
        return primes.paper_weight_matrix(args.n, cap=args.prime_cap)
    m = args.m if args.m is not None else g.n_edges
    n = args.n if args.n is not None else max(3 * m, 2)
    w, _ = primes.admissible_matrix(m, n)
    return w


def cmd_pseudo(args):
    g, _ = read_graph(args.graph)
    w = _weight_matrix(args, g)
    z = statepoly.z_state_weighted(g, w, cap=args.state_cap)
    if args.json:
        dump_json(z.poly.to_json(), args.json)
    if args.matrix_out:
        dump_json(w.to_json(), args.matrix_out)
    _emit(args, z.poly.format(), z.poly.to_json())


def cmd_reconstruct(args):
    data = load_json(args.poly)
    if args.matrix_file:
        w = primes.WeightMatrix.from_json(load_json(args.matrix_file))
        z = Poly.from_json(data, nvars=1)
        g = statepoly.reconstruct_pseudo(z, w)
    else:
        z = Poly.from_json(data)
        nv = z.nvars
        n = 1
        while n * (n + 1) // 2 < nv:
            n += 1
        if n * (n + 1) // 2 != nv:
            raise ValueError(f"{nv} variables is not n(n+1)/2 for any n")
        g = statepoly.reconstruct_symbolic(statepoly.SymbolicStatePoly(n, z))
    if args.out:
        write_graph(args.out, g)
    _emit(args, format_graph(g), {"n_vertices": g.n_vertices, "edges": [list(e) for e in g.edges]})


def _matroid_from_args(args):
    if args.graph:
        g, _ = read_graph(args.graph)
        return matroids.graphic_matroid(g)
    return matroids.vector_matroid_f2(read_matrix(args.matrix))


def cmd_tutte(args):
    if args.algorithm == "graphic":
        if not args.graph:
            raise ValueError("--algorithm graphic needs --graph")
        g, _ = read_graph(args.graph)
        t = matroids.tutte_graphic(g)
    else:
        m = _matroid_from_args(args)
        if args.algorithm == "dc":
            t = matroids.tutte_deletion_contraction(m)
        else:
            t = matroids.tutte_subset_expansion(m, cap=args.subset_cap)
            if args.algorithm == "both" and t != matroids.tutte_deletion_contraction(m):
                raise AssertionError("Tutte algorithms disagree")  # pragma: no cover
    _emit(args, t.format(), t.to_json())


def cmd_wenum(args):
    rows = read_matrix(args.matrix)
    if args.via == "greene":
        w = codes.weight_enumerator_greene(matroids.vector_matroid_f2(rows))
    else:
        w = codes.weight_enumerator_enum(codes.BinaryCode.from_matrix(rows))
    _emit(args, w.format(), w.to_json())


def cmd_replicate4(args):
    c = codes.replicate4(read_code(args.matrix))
    text = c.format() + "\n"
    if args.out:
        Path(args.out).write_text(text)
    _emit(args, text, {"length": c.length, "generators": c.matrix(),
                       "doubly_even": codes.is_doubly_even(c)})


def cmd_theta(args):
    c = read_code(args.matrix)
    if args.direct:
        s = lattices.theta_direct(c, args.prec)
    else:
        s = lattices.theta_from_code(c, args.prec)
    _emit(args, s.format(), s.to_json())


def cmd_pipeline(args):
    g1, marked1 = read_graph(args.g1)
    g2, marked2 = read_graph(args.g2)
    if args.m is not None or args.n is not None:
        g1, g2 = pipeline.bpr_family(g1, g2, marked1, marked2, args.m or 0, args.n or 0)
    report = pipeline.run_pipeline(g1, g2, precision=args.prec, iso_cap=args.iso_cap)
    payload = report.to_json()
    if args.out:
        dump_json(payload, args.out)
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, text, payload)


def cmd_search(args):
    conn = "biconnected" if args.biconnected else "connected"
    pairs = pipeline.search_tequivalent(args.max_v, args.max_e, connectivity=conn)
    index = []
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for k, (a, b, t) in enumerate(pairs):
        names = [f"pair{k:04d}_a.graph", f"pair{k:04d}_b.graph"]
        if out:
            write_graph(out / names[0], a)
            write_graph(out / names[1], b)
        index.append({"files": names, "tutte": t.format(), "edges": a.n_edges,
                      "vertices": a.n_vertices})
    if out:
        dump_json(index, out / "index.json")
    _emit(args, f"{len(pairs)} T-equivalent non-isomorphic pairs", index)


def cmd_primes(args):
    if args.index is not None:
        if args.verify:
            if args.index > args.prime_cap:
                raise CapExceeded(f"P({args.index}) exceeds the sieve cap {args.prime_cap}")
            p = primes.sieve_nth_prime(args.index)
        else:
            p = primes.nth_prime(args.index, cap=args.prime_cap)
        _emit(args, str(p), {"index": args.index, "prime": str(p)})
        return
    if args.matrix == "paper":
        w = primes.paper_weight_matrix(args.n, cap=args.prime_cap)
        if args.verify:
            for (i, j), p in sorted(w.primes.items()):
                ell = args.n ** (args.n * primes.a_index(i, j))
                if ell > args.prime_cap:
                    raise CapExceeded(f"P({ell}) exceeds the sieve cap {args.prime_cap}")
                if primes.sieve_nth_prime(ell) != p:
                    raise ValueError(f"cached P({ell}) = {p} disagrees with the sieve")
    else:
        w, _ = primes.admissible_matrix(args.m, args.n)
    _emit(args, w.format(), w.to_json())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tuttetheta", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["text", "json"], default="text",
                   help="stdout format")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nstate", help="n-state polynomial (Negami form unless --symbolic)")
    s.add_argument("--graph", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--symbolic", action="store_true", help="full polynomial in x_ij")
    s.add_argument("--state-cap", type=int, default=statepoly.DEFAULT_STATE_CAP)
    s.add_argument("--json", help="also write polynomial JSON here")
    s.set_defaults(func=cmd_nstate)

    s = sub.add_parser("pseudo", help="pseudo n-state polynomial")
    s.add_argument("--graph", required=True)
    s.add_argument("--matrix", choices=["paper", "admissible"], default="admissible")
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int, help="edge budget for --matrix admissible")
    s.add_argument("--prime-cap", type=int, default=primes.DEFAULT_PRIME_CAP)
    s.add_argument("--state-cap", type=int, default=statepoly.DEFAULT_STATE_CAP)
    s.add_argument("--json", help="write polynomial JSON here")
    s.add_argument("--matrix-out", help="write the weight matrix JSON here")
    s.set_defaults(func=cmd_pseudo)

    s = sub.add_parser("reconstruct", help="recover a graph from a state polynomial")
    s.add_argument("--poly", required=True)
    s.add_argument("--matrix-file", help="weight matrix JSON; omit for a symbolic polynomial")
    s.add_argument("--out")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("tutte", help="Tutte polynomial")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--matrix")
    s.add_argument("--algorithm", choices=["subset", "dc", "both", "graphic"], default="subset",
                   help="graphic: vertex-subset dynamic program, graphs only")
    s.add_argument("--subset-cap", type=int, default=matroids.DEFAULT_SUBSET_CAP)
    s.set_defaults(func=cmd_tutte)

    s = sub.add_parser("wenum", help="weight enumerator of a row space")
    s.add_argument("--matrix", required=True)
    s.add_argument("--via", choices=["greene", "enum"], default="enum")
    s.set_defaults(func=cmd_wenum)

    s = sub.add_parser("replicate4", help="replace each coordinate by four copies")
    s.add_argument("--matrix", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_replicate4)

    s = sub.add_parser("theta", help="theta series of the Construction A lattice")
    s.add_argument("--matrix", required=True)
    s.add_argument("--prec", type=int, default=pipeline.THETA_PRECISION,
                   help="precision in quarter powers of q")
    s.add_argument("--direct", action="store_true", help="enumerate lattice vectors")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("pipeline", help="graph pair -> code -> lattice report")
    s.add_argument("--g1", required=True)
    s.add_argument("--g2", required=True)
    s.add_argument("--m", type=int, help="subdivisions per marked edge")
    s.add_argument("--n", type=int, help="length of the joined path")
    s.add_argument("--prec", type=int, default=pipeline.THETA_PRECISION)
    s.add_argument("--iso-cap", type=int, default=12)
    s.add_argument("--out")
    s.set_defaults(func=cmd_pipeline)

    s = sub.add_parser("search", help="find T-equivalent non-isomorphic graph pairs")
    s.add_argument("--max-v", type=int, required=True)
    s.add_argument("--max-e", type=int, required=True)
    s.add_argument("--biconnected", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("primes", help="nth prime or a prime weight matrix")
    s.add_argument("--index", type=int)
    s.add_argument("--matrix", choices=["paper", "admissible"], default="paper")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--verify", action="store_true", help="recompute with the sieve, ignoring the cache")
    s.add_argument("--prime-cap", type=int, default=primes.DEFAULT_PRIME_CAP)
    s.set_defaults(func=cmd_primes)
    return p


def _validate(args):
    for name in ("n", "m", "prec", "max_v", "max_e", "index"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            raise ValueError(f"--{name.replace('_', '-')} must be nonnegative")
    for name in ("prime_cap", "state_cap", "subset_cap", "iso_cap"):
        v = getattr(args, name, None)
        if v is not None and v <= 0:
            raise ValueError(f"--{name.replace('_', '-')} must be positive")
    files = ["graph", "poly", "matrix_file", "g1", "g2"]
    if args.command not in ("pseudo", "primes"):  # there --matrix names a kind, not a file
        files.append("matrix")
    for name in files:
        v = getattr(args, name, None)
        if v and not Path(v).is_file():
            raise FileNotFoundError(f"no such file: {v}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _validate(args)
        args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FormatError, DecodeError, ValueError, TypeError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
