"""Command-line entry point: ``python -m secantdesigns <subcommand> ...``.

Exit status: 0 on success, 1 when a verification fails (a ``FAIL`` line
with key=value fields is printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

from . import design as dz
from . import iso, search
from .geometry import default_conic
from .perm import close, format_generators, identify, is_frobenius_f42, parse_generators
from .ree import default_model, example_designs, sigma_elation_check, centralizer_orbits

log = logging.getLogger("secantdesigns")


class VerificationFailure(Exception):
    def __init__(self, reason: str, **fields):
        super().__init__(reason)
        self.reason = reason
        self.fields = fields

    def report(self) -> str:
        kv = " ".join(f"{k}={v}" for k, v in self.fields.items())
        return f"FAIL {self.reason} {kv}".rstrip()


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _load_design(path: str) -> dz.Design:
    text = Path(path).read_text(encoding="utf-8")
    return dz.parse_json(text) if text.lstrip().startswith("{") else dz.parse_text(text)


def _designs_arg(which: str) -> list[int]:
    return [1, 2, 3, 4] if which == "all" else [int(which)]


# -- subcommands --

def cmd_geometry(args) -> int:
    conic = default_conic()
    plane = conic.plane
    if args.dump:
        _write(plane.dump(), args.out)
        return 0
    through_nucleus = all(plane.incident(conic.nucleus, t) for t in conic.tangents)
    lines = [
        f"points: {len(plane.points)}",
        f"lines: {len(plane.lines)}",
        f"conic points: {len(conic.conic_points)}",
        f"nucleus N: {conic.nucleus} {plane.coords[conic.nucleus]}",
        f"secants: {len(conic.secants)}",
        f"tangents: {len(conic.tangents)} (all through N: {str(through_nucleus).lower()})",
        f"external lines: {len(conic.externals)}",
    ]
    _write("\n".join(lines) + "\n", args.out)
    if (len(conic.secants), len(conic.tangents), len(conic.externals)) != (36, 9, 28) or not through_nucleus:
        raise VerificationFailure("line-classification", secants=len(conic.secants))
    return 0


def cmd_group(args) -> int:
    if args.read_generators:
        gens = parse_generators(Path(args.read_generators).read_text())
        H = close(gens)
        prim = H.is_primitive()[0] if H.is_transitive() else False
        _write(
            f"order: {H.order}\ntransitive: {str(H.is_transitive()).lower()}\n"
            f"primitive: {str(prim).lower()}\norbit lengths: {[len(o) for o in H.orbits()]}\n",
            args.out,
        )
        return 0
    M = default_model()
    G = M.G
    if args.write_generators:
        Path(args.write_generators).write_text(format_generators(list(G.generators), 36))
        log.info("wrote %s", args.write_generators)
    Gl = G.stabilizer(0)
    primitive = G.is_primitive()[0]
    classes3 = G.conjugacy_classes_of_prime_order(3)
    lines = [
        f"|G| = {G.order}",
        f"|G'| = {M.Gder.order}",
        f"G transitive on 36 secants: {str(G.is_transitive()).lower()}",
        f"G primitive on 36 secants: {str(primitive).lower()}",
        f"|G_ℓ| = {Gl.order} (F42: {str(is_frobenius_f42(Gl)).lower()})",
        f"subdegrees: {sorted(len(o) for o in Gl.orbits())}",
        f"|C_G(γ)| = {M.CGgamma.order} ({identify(M.CGgamma)})",
        f"C_G(η) as <η, σ>: order {M.CGeta.order} ({identify(M.CGeta)}); full centralizer of η: order {M.true_CGeta.order}",
        f"K = <γ, σ>: order {M.K.order} ({identify(M.K)}), self-normalizing: {str(G.normalizer(M.K) == M.K).lower()}",
        f"classes of subgroups of order 3: {len(classes3)} "
        f"(in G': {sum(g in M.Gder for g in classes3)}, outside: {sum(g not in M.Gder for g in classes3)})",
        f"F = {M.F}, W = {M.W}, W^σ = {M.Wsigma}, P = {M.P}",
    ]
    el = sigma_elation_check(M)
    lines.append(
        f"σ elation: axis FN = line {el['axis']} (tangent: {str(el['axis_tangent']).lower()}), "
        f"centre W^σW ∩ FN = point {el['centre']}, verified: "
        f"{str(el['fixes_axis_pointwise'] and el['fixes_lines_through_centre']).lower()}"
    )
    _write("\n".join(lines) + "\n", args.out)
    if G.order != 1512 or M.Gder.order != 504 or not primitive:
        raise VerificationFailure("group", order=G.order)
    return 0


def cmd_orbits(args) -> int:
    _write(centralizer_orbits(default_model()).format(), args.out)
    return 0


def cmd_designs(args) -> int:
    M = default_model()
    Ds = example_designs(M)
    rows = []
    ok = True
    for i in _designs_arg(args.which):
        D = Ds[i]
        if args.verify:
            p = dz.verify_2design(D)
            ft = dz.verify_flag_transitive(M.G, D)
            ok &= ft
            rows.append(f"D{i}: {p}, flag-transitive: {str(ft).lower()}")
        else:
            rows.append(f"D{i}: base block B{i} = {list(M.base_blocks[i - 1])}, b={D.b}")
    if len(rows) == 1:
        rows[0] = rows[0].split(": ", 1)[1]
    _write("\n".join(rows) + "\n", args.out)
    if not ok:
        raise VerificationFailure("flag-transitivity", which=args.which)
    return 0


def cmd_verify(args) -> int:
    D = _load_design(args.design)
    try:
        p = dz.verify_2design(D)
    except dz.NotA2DesignError as e:
        raise VerificationFailure("not-a-2-design", witness=",".join(map(str, e.witness or ())), count=e.count, expected=e.expected)
    out = [str(p)]
    if args.group:
        M = default_model()
        H = M.G if args.group == "G" else M.Gder
        try:
            ft = dz.verify_flag_transitive(H, D)
        except dz.NotInvariantError:
            raise VerificationFailure("not-invariant", group=args.group)
        out.append(f"flag-transitive under {args.group}: {str(ft).lower()}")
        if not ft:
            _write("\n".join(out) + "\n", args.out)
            raise VerificationFailure("not-flag-transitive", group=args.group)
    _write("\n".join(out) + "\n", args.out)
    return 0


def _design_from(args, which_attr="which", path_attr="design"):
    which, path = getattr(args, which_attr), getattr(args, path_attr)
    if path:
        return [_load_design(p) for p in path]
    Ds = example_designs()
    return [Ds[int(w)] for w in which]


def cmd_aut(args) -> int:
    D = _design_from(args)[0]
    A = iso.automorphism_group(D)
    _write(f"|Aut| = {A.order}\ngenerators: {len(A.generators)}\n", args.out)
    return 0


def cmd_iso(args) -> int:
    Ds = _design_from(args)
    if args.certificate:
        _write("".join(iso.canonical_form(D).hex() + "\n" for D in Ds), args.out)
        return 0
    if len(Ds) != 2:
        raise SystemExit("iso: give exactly two designs (or --certificate)")
    same, phi = iso.are_isomorphic(*Ds)
    text = f"isomorphic: {str(same).lower()}\n"
    if same:
        text += "map: " + " ".join(map(str, phi)) + "\n"
    _write(text, args.out)
    return 0


def cmd_search(args) -> int:
    M = default_model()
    lambdas = (1, 2, 3, 6) if args.lam == "all" else (int(args.lam),)
    if args.exhaustive:
        res = search.exhaustive_search(M, lambdas, args.group, workers=args.workers)
    else:
        res = search.completeness_search(M, lambdas, args.group)
    search.name_entries(res, {f"D{i}": D for i, D in example_designs(M).items()})
    lines = [res.summary()]
    for e in res.entries:
        lines.append(f"  λ={e.lam} |H_B|={e.stab_order} ≅ {e.name or '?'}  base block {list(e.base_block)}")
    sys.stdout.write("\n".join(lines) + "\n")
    if args.out:
        chunks = []
        for e in res.entries:
            chunks.append(f"# λ={e.lam} ≅ {e.name or '?'}\n" + dz.export_text(e.design))
        Path(args.out).write_text("".join(chunks), encoding="utf-8")
        log.info("wrote %s", args.out)
    return 0


def cmd_export(args) -> int:
    M = default_model()
    D = example_designs(M)[int(args.which)]
    if args.format == "json":
        _write(dz.export_json(D, dz.verify_2design(D)), args.out)
    else:
        _write(dz.export_text(D), args.out)
    return 0


def cmd_params(args) -> int:
    if args.out_order is not None or args.stab_order is not None:
        if args.out_order is None or args.stab_order is None:
            raise SystemExit("params: --out-order and --stab-order go together")
        ok = search.outer_divisibility_filter(args.k, args.out_order, args.stab_order)
        d = (args.k + 1) // math.gcd(args.k + 1, args.out_order)
        sys.stdout.write(f"(k+1)/gcd(k+1,|Out|) = {d}; divides {args.stab_order}: {str(ok).lower()}\n")
        if not ok:
            raise VerificationFailure("divisibility", k=args.k, divisor=d, stab=args.stab_order)
        return 0
    if args.lam is None:
        raise SystemExit("params: --lambda is required")
    try:
        p = search.admissible_params(args.k, args.lam)
    except search.InadmissibleError as e:
        raise VerificationFailure("inadmissible", k=args.k, **{"lambda": args.lam, "why": str(e).replace(" ", "_")})
    sys.stdout.write(
        f"v={p.v} b={p.b} r={p.r} k={p.k} λ={p.lam}; (r/λ)^2 > k^2: {str(search.replication_ratio_exceeds_k(p)).lower()}\n"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="secantdesigns", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn)
        p.add_argument("--out", help="write output to this file")
        return p

    p = add("geometry", cmd_geometry, "PG(2,8), the conic and the line classification")
    p.add_argument("--dump", action="store_true", help="print the incidence dump instead")

    p = add("group", cmd_group, "the group on the 36 secants")
    p.add_argument("--write-generators", metavar="PATH")
    p.add_argument("--read-generators", metavar="PATH", help="close these generators and report instead")

    add("orbits", cmd_orbits, "orbit tables of C_G(γ), C_G(η) and K on the secants")

    p = add("designs", cmd_designs, "the designs D1..D4")
    p.add_argument("--which", choices=["1", "2", "3", "4", "all"], default="all")
    p.add_argument("--verify", action="store_true")

    p = add("verify", cmd_verify, "verify a design file")
    p.add_argument("--design", required=True)
    p.add_argument("--group", choices=["G", "Gprime"])

    p = add("aut", cmd_aut, "automorphism group order of a design")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--which", nargs=1, choices=["1", "2", "3", "4"])
    g.add_argument("--design", nargs=1)

    p = add("iso", cmd_iso, "isomorphism test or certificate dump")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--which", nargs="+", choices=["1", "2", "3", "4"])
    g.add_argument("--design", nargs="+")
    p.add_argument("--certificate", action="store_true", help="print canonical certificates as hex")

    p = add("search", cmd_search, "completeness search for flag-transitive 2-(36,6,λ) designs")
    p.add_argument("--group", choices=["G", "Gprime"], default="G")
    p.add_argument("--lambda", dest="lam", choices=["1", "2", "3", "6", "all"], default="all")
    p.add_argument("--exhaustive", action="store_true", help="scan all C(36,6) subsets")
    p.add_argument("--workers", type=int, help=f"worker processes (capped by ${search.WORKERS_ENV})")

    p = add("export", cmd_export, "export a design")
    p.add_argument("--which", choices=["1", "2", "3", "4"], required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("params", cmd_params, "admissible parameters and the outer-automorphism divisibility filter")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--out-order", type=int)
    p.add_argument("--stab-order", type=int)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(message)s")
    try:
        return args.func(args)
    except VerificationFailure as e:
        print(e.report())
        return 1


if __name__ == "__main__":
    sys.exit(main())
