"""Command line front end.

Subcommands: paths, onedsum, energy, kostka, fermionic, limit, verify.
Every subcommand takes --json for machine-readable output.  Exit codes:
0 success, 1 a check failed (route disagreement, failed suite, ladder
that would not freeze), 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import as_partition, kostka_foulkes
from .crystal import ANTISYM, SYM, Path, path_from_words
from .energy import (
    energy,
    energy_elines,
    energy_lines,
    energy_parts,
    energy_table,
    ground_state_energy,
)
from .fermionic import (
    CartanDatum,
    ff_kostka,
    ff_kostka_dual,
    ff_restricted_branch_dual,
    ff_restricted_rect,
    ff_restricted_rect_dual,
    ff_unrestricted_antisym,
    ff_unrestricted_sym,
    general_string_series,
    rsos_spinon_series,
    spinon_branching_series,
    string_series_single,
    string_series_tensor,
    twisted_branching_series,
)
from .harness import (
    SUITES,
    StabilizationError,
    report_to_file,
    run_suite,
    stabilized_limit,
)
from .paths import (
    CLASSICAL,
    RESTRICTED,
    UNRESTRICTED,
    decompose,
    enumerate_paths,
    hw_set,
    onedsum,
)

_FORMULAS = {
    "sym-sum": "sym-sum",
    "antisym-sum": "antisym-sum",
    "kostka": "kostka",
    "kostka-dual": "kostka-dual",
    "restricted": "restricted",
    "restricted-dual": "restricted-dual",
    "branch-dual": "branch-dual",
    # short aliases kept for interface stability
    "ffkk": "sym-sum",
    "ffkkp": "antisym-sum",
    "kr": "kostka",
    "dual": "kostka-dual",
    "Fl": "restricted",
    "Flp": "restricted-dual",
    "Flrp": "branch-dual",
}


def _shape(text: str, name: str = "shape") -> tuple:
    """Comma separated nonnegative integers; empty string means ()."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"{name} must be comma-separated integers, got {text!r}")
    if any(x < 0 for x in parts):
        raise ValueError(f"{name} must be nonnegative, got {text!r}")
    return parts


def _partition(text: str, name: str = "partition") -> tuple:
    parts = _shape(text, name)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{name} must weakly decrease, got {text!r}")
    return tuple(x for x in parts if x)


def _emit(args, text_value, json_value) -> None:
    if args.json:
        json.dump(json_value, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(text_value)


def _add_common_shape_flags(p, with_level=True):
    p.add_argument("--n", type=int, required=True, help="rank: letters 1..n")
    p.add_argument("--kind", choices=(SYM, ANTISYM), default=SYM)
    p.add_argument("--mu", required=True,
                   help="path shape, comma separated (e.g. 2,2,1,1)")
    p.add_argument("--class", dest="cls",
                   choices=(UNRESTRICTED, CLASSICAL, RESTRICTED),
                   default=UNRESTRICTED)
    p.add_argument("--lambda", dest="lam", default=None,
                   help="weight as a partition (e.g. 3,2,1)")
    if with_level:
        p.add_argument("--level", type=int, default=None,
                       help="restriction level (restricted class only)")
    p.add_argument("--json", action="store_true")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="crystalpaths",
        description="Crystal paths, energy statistics, charge, configuration "
                    "sums, and q-series limits for the cyclic rank-n setting.")
    sub = top.add_subparsers(dest="command", required=True)

    p_paths = sub.add_parser("paths", help="enumerate paths or sum them")
    paths_sub = p_paths.add_subparsers(dest="paths_command", required=True)
    p_enum = paths_sub.add_parser("enum", help="list paths with energies")
    _add_common_shape_flags(p_enum)
    p_psum = paths_sub.add_parser("onedsum", help="graded sum over one class")
    _add_common_shape_flags(p_psum)
    p_hw = paths_sub.add_parser("hwset", help="prefix-dominant paths from level*W_r")
    p_hw.add_argument("--n", type=int, required=True)
    p_hw.add_argument("--kind", choices=(SYM, ANTISYM), default=SYM)
    p_hw.add_argument("--level", type=int, required=True)
    p_hw.add_argument("--r", type=int, default=0)
    p_hw.add_argument("--mu", required=True)
    p_hw.add_argument("--decompose", action="store_true",
                      help="print branching weights with energy shifts instead")
    p_hw.add_argument("--json", action="store_true")

    p_sum = sub.add_parser("onedsum", help="graded sum over a path class")
    _add_common_shape_flags(p_sum)

    p_energy = sub.add_parser("energy", help="energy of one path")
    p_energy.add_argument("--n", type=int, required=True)
    p_energy.add_argument("--kind", choices=(SYM, ANTISYM), default=SYM)
    p_energy.add_argument("--path", required=True,
                          help="components as letter words, comma separated "
                               "(e.g. 11,22,3,1)")
    p_energy.add_argument("--lines", action="store_true",
                          help="also print the line decomposition")
    p_energy.add_argument("--json", action="store_true")

    p_kostka = sub.add_parser("kostka", help="charge / configuration / path routes")
    p_kostka.add_argument("--shape", required=True)
    p_kostka.add_argument("--weight", required=True)
    p_kostka.add_argument("--n", type=int, default=None,
                          help="rank for the configuration and path routes "
                               "(default: number of shape rows)")
    p_kostka.add_argument("--method",
                          choices=("charge", "config", "paths", "all"),
                          default="all")
    p_kostka.add_argument("--json", action="store_true")

    p_ferm = sub.add_parser("fermionic", help="configuration sums and q-series")
    ferm_sub = p_ferm.add_subparsers(dest="fermionic_command", required=True)
    p_eval = ferm_sub.add_parser("eval", help="evaluate one configuration sum")
    p_eval.add_argument("--formula", required=True, choices=sorted(_FORMULAS),
                        help="sym-sum | antisym-sum | kostka | kostka-dual | "
                             "restricted | restricted-dual | branch-dual "
                             "(short aliases accepted)")
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--lambda", dest="lam", default=None)
    p_eval.add_argument("--mu", default=None)
    p_eval.add_argument("--eta", default=None)
    p_eval.add_argument("--level", type=int, default=None)
    p_eval.add_argument("--r", type=int, default=0)
    p_eval.add_argument("--json", action="store_true")
    p_series = ferm_sub.add_parser("series", help="q-series to a given order")
    p_series.add_argument("--which", required=True,
                          choices=("string", "tensor", "spinon", "rsos",
                                   "twisted", "general"))
    p_series.add_argument("--n", type=int, default=None)
    p_series.add_argument("--level", type=int, default=None)
    p_series.add_argument("--r", type=int, default=0)
    p_series.add_argument("--nu", default="")
    p_series.add_argument("--mu", default="")
    p_series.add_argument("--lambda", dest="lam", default="")
    p_series.add_argument("--t", type=int, default=None,
                          help="column height for the rsos series")
    p_series.add_argument("--blocks", default="",
                          help="tensor blocks as level@node pairs, e.g. 1@0,1@0")
    p_series.add_argument("--datum", default=None,
                          help='general: JSON {"cartan": [[...]], "symmetrizer": [...]}')
    p_series.add_argument("--levels", default="",
                          help="general: comma separated block levels")
    p_series.add_argument("--coords", default="",
                          help="general: weight in fundamental coordinates")
    p_series.add_argument("--order", type=int, default=6)
    p_series.add_argument("--json", action="store_true")

    p_limit = sub.add_parser("limit", help="stabilized ladder window")
    p_limit.add_argument("--n", type=int, required=True)
    p_limit.add_argument("--level", "-l", type=int, required=True, dest="level")
    p_limit.add_argument("--r", type=int, default=0)
    p_limit.add_argument("--nu", default="", help="fixed tail of the shape ladder")
    p_limit.add_argument("--class", dest="cls", choices=("g", "X", "Xl"),
                         default="g")
    p_limit.add_argument("--lambda", dest="lam", default="")
    p_limit.add_argument("--order", type=int, default=6)
    p_limit.add_argument("--part-size", type=int, default=None,
                         help="ladder part size (default: the level)")
    p_limit.add_argument("--restrict-level", type=int, default=None,
                         help="restriction level for class Xl (default: the level)")
    p_limit.add_argument("--ceiling", type=int, default=None,
                         help="largest ladder length to try")
    p_limit.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", default="all",
                          choices=SUITES + ("all",))
    p_verify.add_argument("--order", type=int, default=6)
    p_verify.add_argument("--max-n", type=int, default=3)
    p_verify.add_argument("--max-mu", type=int, default=7,
                          help="largest shape size in the sweeps")
    p_verify.add_argument("--max-level", type=int, default=3)
    p_verify.add_argument("--quiet", action="store_true",
                          help="print only failures and the summary")
    p_verify.add_argument("--json", default=None, metavar="FILE",
                          help="also write the full report as JSON")
    return top


def _cmd_enum(args) -> int:
    lam = _partition(args.lam, "--lambda") if args.lam is not None else None
    pairs = enumerate_paths(args.n, _shape(args.mu, "--mu"), args.kind,
                            args.cls, lam=lam, level=args.level)
    if args.json:
        out = [{"path": p.to_json(), "word": p.word(), "energy": e}
               for p, e in pairs]
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for p, e in pairs:
            print(f"{p.word()}  E={e}")
        print(f"total: {len(pairs)}")
    return 0


def _cmd_onedsum(args) -> int:
    lam = _partition(args.lam, "--lambda") if args.lam is not None else None
    poly = onedsum(args.n, _shape(args.mu, "--mu"), args.kind, args.cls,
                   lam=lam, level=args.level)
    _emit(args, str(poly), poly.to_json())
    return 0


def _cmd_hwset(args) -> int:
    mu = _partition(args.mu, "--mu")
    if args.decompose:
        rows = decompose(args.n, args.level, args.r, mu, args.kind)
        if args.json:
            out = [{"weight": str(w), "shift": str(s)} for w, s in rows]
            json.dump(out, sys.stdout, indent=2)
            sys.stdout.write("\n")
        else:
            for w, s in rows:
                print(f"{w}  shift={s}")
    else:
        entries = hw_set(args.n, args.level, args.r, mu, args.kind)
        if args.json:
            out = [{"path": e.path.to_json(), "word": e.path.word(),
                    "weight": str(e.weight), "energy": e.energy}
                   for e in entries]
            json.dump(out, sys.stdout, indent=2)
            sys.stdout.write("\n")
        else:
            for e in entries:
                print(f"{e.path.word()}  {e.weight}  E={e.energy}")
            print(f"total: {len(entries)}")
    return 0


def _cmd_energy(args) -> int:
    words = [w.strip() for w in args.path.split(",") if w.strip()]
    p = path_from_words(words, args.n, args.kind)
    e = energy(p)
    parts = energy_parts(p)
    table = energy_table(p)
    lines = energy_lines(p) if args.lines else None
    if args.json:
        out = {
            "energy": e,
            "parts": list(parts),
            "pair_table": [[i, j, h] for (i, j), h in sorted(table.items())],
            "lines_total": energy_elines(p) if args.lines else None,
            "lines": [{"start": s, "steps": steps} for s, steps in lines]
            if lines is not None else None,
        }
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return 0
    print(f"E = {e}")
    print("parts:", ",".join(str(x) for x in parts))
    for (i, j), h in sorted(table.items()):
        print(f"H[{i},{j}] = {h}")
    if lines is not None:
        print(f"lines total = {energy_elines(p)}")
        for start, steps in lines:
            walk = " ".join(f"(c{c},r{r},{'w' if w else '-'})"
                            for c, r, w in steps)
            print(f"line from column {start}: {walk}")
    return 0


def _cmd_kostka(args) -> int:
    shape = _partition(args.shape, "--shape")
    weight = _partition(args.weight, "--weight")
    n = args.n if args.n is not None else max(len(shape), 1)
    if len(shape) > n:
        raise ValueError(f"--n {n} is smaller than the number of shape rows")
    results = {}
    if args.method in ("charge", "all"):
        results["charge"] = kostka_foulkes(shape, weight)
    if args.method in ("config", "all"):
        results["config"] = ff_kostka(n, shape, weight)
    if args.method in ("paths", "all"):
        results["paths"] = onedsum(n, weight, SYM, CLASSICAL, lam=shape)
    values = list(results.values())
    agree = all(v == values[0] for v in values)
    if args.json:
        out = {k: v.to_json() for k, v in results.items()}
        out["agree"] = agree
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif len(results) == 1:
        print(str(values[0]))
    else:
        for k, v in results.items():
            print(f"{k}: {v}")
        print("agree" if agree else "MISMATCH")
    return 0 if agree else 1


def _cmd_fermionic_eval(args) -> int:
    formula = _FORMULAS[args.formula]
    lam = _partition(args.lam, "--lambda") if args.lam is not None else None
    mu = _partition(args.mu, "--mu") if args.mu is not None else None
    eta = _partition(args.eta, "--eta") if args.eta is not None else None

    def need(value, flag):
        if value is None:
            raise ValueError(f"--formula {args.formula} needs {flag}")
        return value

    if formula == "sym-sum":
        poly = ff_unrestricted_sym(args.n, need(lam, "--lambda"),
                                   need(mu, "--mu"))
    elif formula == "antisym-sum":
        poly = ff_unrestricted_antisym(args.n, need(lam, "--lambda"),
                                       need(mu, "--mu"))
    elif formula == "kostka":
        poly = ff_kostka(args.n, need(lam, "--lambda"), need(mu, "--mu"))
    elif formula == "kostka-dual":
        poly = ff_kostka_dual(args.n, need(lam, "--lambda"), need(mu, "--mu"))
    elif formula == "restricted":
        poly = ff_restricted_rect(args.n, need(args.level, "--level"),
                                  need(mu, "--mu"))
    elif formula == "restricted-dual":
        poly = ff_restricted_rect_dual(args.n, need(args.level, "--level"),
                                       need(mu, "--mu"))
    else:
        poly = ff_restricted_branch_dual(args.n, need(args.level, "--level"),
                                         args.r, need(eta, "--eta"),
                                         need(mu, "--mu"))
    _emit(args, str(poly), poly.to_json())
    return 0


def _parse_blocks(text: str) -> list:
    blocks = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        level_text, _, node_text = item.partition("@")
        blocks.append((int(level_text), int(node_text or 0)))
    if not blocks:
        raise ValueError("--blocks must list level@node pairs, e.g. 1@0,1@0")
    return blocks


def _cmd_fermionic_series(args) -> int:
    def need(value, flag):
        if value is None:
            raise ValueError(f"--which {args.which} needs {flag}")
        return value

    if args.which == "string":
        s = string_series_single(need(args.n, "--n"), need(args.level, "--level"),
                                 args.r, _partition(args.nu, "--nu"),
                                 _partition(args.lam, "--lambda"), args.order)
    elif args.which == "tensor":
        s = string_series_tensor(need(args.n, "--n"), _parse_blocks(args.blocks),
                                 _partition(args.lam, "--lambda"), args.order)
    elif args.which == "spinon":
        s = spinon_branching_series(need(args.n, "--n"),
                                    need(args.level, "--level"),
                                    _partition(args.lam, "--lambda"), args.order)
    elif args.which == "rsos":
        s = rsos_spinon_series(need(args.n, "--n"), need(args.level, "--level"),
                               need(args.t, "--t"), args.order)
    elif args.which == "twisted":
        s = twisted_branching_series(need(args.n, "--n"),
                                     need(args.level, "--level"), args.r,
                                     _partition(args.mu, "--mu"),
                                     _partition(args.lam, "--lambda"), args.order)
    else:
        raw = json.loads(need(args.datum, "--datum"))
        datum = CartanDatum.from_cartan(raw["cartan"], raw["symmetrizer"])
        levels = list(_shape(args.levels, "--levels"))
        coords = _shape(args.coords, "--coords")
        s = general_string_series(datum, levels, coords, args.order)
    _emit(args, str(s), s.to_json())
    return 0


def _cmd_limit(args) -> int:
    try:
        s = stabilized_limit(args.n, args.level, args.r,
                             _partition(args.nu, "--nu"), args.cls,
                             _partition(args.lam, "--lambda"), args.order,
                             part_size=args.part_size,
                             level=args.restrict_level,
                             ceiling=args.ceiling)
    except StabilizationError as exc:
        print(f"did not stabilize: {exc}", file=sys.stderr)
        return 1
    _emit(args, str(s), s.to_json())
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, max_n=args.max_n, max_size=args.max_mu,
                       order=args.order, max_level=args.max_level)
    for r in report.results:
        if not args.quiet or r.status == "fail":
            print(r.line())
    print(report.summary())
    if args.json:
        report_to_file(report, args.json)
        print(f"report written to {args.json}")
    return 0 if report.ok() else 1


def dispatch(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "paths":
            if args.paths_command == "enum":
                return _cmd_enum(args)
            if args.paths_command == "onedsum":
                return _cmd_onedsum(args)
            return _cmd_hwset(args)
        if args.command == "onedsum":
            return _cmd_onedsum(args)
        if args.command == "energy":
            return _cmd_energy(args)
        if args.command == "kostka":
            return _cmd_kostka(args)
        if args.command == "fermionic":
            if args.fermionic_command == "eval":
                return _cmd_fermionic_eval(args)
            return _cmd_fermionic_series(args)
        if args.command == "limit":
            return _cmd_limit(args)
        return _cmd_verify(args)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
