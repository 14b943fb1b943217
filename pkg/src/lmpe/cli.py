"""Command-line interface.

Exit codes: 0 ok, 2 usage, 3 data format, 4 decode failure, 5 search failure.
"""

import argparse
import json
import sys
import time
from typing import List, Optional

from . import blockcodes, bounds as bounds_mod, classify, gray as gray_mod, prob
from .constructions import LmpeCodeSpec, Message, build

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_DECODE = 4
EXIT_SEARCH = 5


def _load_spec(path: str) -> LmpeCodeSpec:
    with open(path) as fh:
        raw = json.load(fh)
    try:
        return LmpeCodeSpec(**raw)
    except TypeError as exc:
        raise ValueError(f"bad code spec {path}: {exc}")


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_lines(path: Optional[str]) -> List[str]:
    data = open(path).read() if path else sys.stdin.read()
    return [ln for ln in data.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _parse_range(text: str) -> List[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(v) for v in text.split(",")]


def cmd_build(args) -> int:
    code = build(_load_spec(args.spec))
    report = {
        "variant": code.spec.variant, "k": code.k, "l": code.l, "t": code.t,
        "n": code.n, "m": code.m, "rate": code.rate,
        "parity_positions": code.layout["parity"],
        "quotient_messages": code.quotient_messages,
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_encode(args) -> int:
    code = build(_load_spec(args.spec))
    quots = [int(v) for v in args.quotients.split(",")] if args.quotients \
        else [0] * len(code.layout["parity"])
    lines_out = []
    for line in _read_lines(args.infile):
        info = prob.parse_word(line, code.k)
        msg = Message(list(info), list(quots))
        lines_out.append(prob.format_word(code.encode(msg)))
    _emit("\n".join(lines_out) + "\n", args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    code = build(_load_spec(args.spec))
    lines_out = []
    for line in _read_lines(args.infile):
        received = prob.parse_word(line, code.k)
        res = code.decode(received)
        info_line = prob.format_word(res.message.info_symbols)
        if res.message.parity_quotients:
            info_line += " # quotients " + ",".join(
                map(str, res.message.parity_quotients))
        lines_out.append(info_line)
    _emit("\n".join(lines_out) + "\n", args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    import random
    code = build(_load_spec(args.spec))
    mapped = set(code.cmap.entries.values()) if hasattr(code, "cmap") else None
    pool = list(prob.alphabet(code.k))
    if mapped is not None:
        pool = [x for x in pool
                if classify.class_index(classify.split(x, code.l).remainder,
                                        code.cmap) is not None]
    t0 = time.time()
    success = miscorrect = erasures_seen = 0
    for trial in range(args.trials):
        rng = random.Random((args.seed, trial).__hash__())
        info = [pool[rng.randrange(len(pool))] for _ in range(code.m)]
        quots = [rng.randrange(code.quotient_messages)
                 for _ in range(len(code.layout["parity"]))]
        msg = Message(info, quots if code.spec.variant != "systematic" else [])
        word = code.encode(msg)
        errors = prob.sample_lmpe(word, code.l, code.t, seed=args.seed * 1_000_003 + trial)
        received = prob.apply_word_error(word, errors)
        try:
            res = code.decode(received)
        except blockcodes.DecodeFailure:
            continue
        if res.word == [tuple(v) for v in word]:
            success += 1
        else:
            miscorrect += 1
        erasures_seen += len(res.erasure_positions)
    report = {
        "trials": args.trials, "decode_success": success,
        "miscorrections": miscorrect, "erasures_seen": erasures_seen,
        "wall_time": round(time.time() - t0, 3), "seed": args.seed,
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK if success == args.trials else EXIT_DECODE


def cmd_bounds(args) -> int:
    rows = ["t,spb_rate,gvb_rate"]
    for t in _parse_range(args.t):
        spb = bounds_mod.sphere_packing(args.n, args.k, t, args.l, args.variant)
        gvb = bounds_mod.gv_bound(args.n, args.k, t, args.l)
        rows.append(f"{t},{spb.rate:.6f},{gvb.rate:.6f}")
    _emit("\n".join(rows) + ("\n" if args.csv else "\n"), args.out)
    return EXIT_OK


def cmd_search_gray(args) -> int:
    mapping = gray_mod.gray_search(args.k, args.l, args.q, args.g,
                                   policy=args.policy)
    if mapping is None or not gray_mod.gray_validate(mapping):
        sys.stderr.write("gray mapping search failed\n")
        return EXIT_SEARCH
    _emit(gray_mod.format_mapping(mapping), args.out)
    return EXIT_OK


def cmd_search_critical(args) -> int:
    vecs = classify.find_critical_vectors(args.l)
    _emit("".join(",".join(map(str, v)) + "\n" for v in vecs), args.out)
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.what == "class-map":
        cmap = classify.make_class_map(args.l, args.k, args.q or None)
        lines = [",".join(map(str, b)) + f" -> {v}"
                 for b, v in sorted(cmap.entries.items(), key=lambda kv: kv[1])]
    elif args.what == "error-patterns":
        lines = [",".join(map(str, b))
                 for b in classify.remainder_error_patterns(args.l)]
    elif args.what == "reduced":
        crit = classify.find_critical_vectors(args.l)
        if not crit:
            sys.stderr.write(f"no critical vector for l={args.l}\n")
            return EXIT_SEARCH
        table = classify.build_reduced_table(args.l, args.k, crit[0])
        lines = [" | ".join(",".join(map(str, v)) for v in row)
                 for row in table.rows]
    else:
        raise ValueError(f"unknown table {args.what!r}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lmpe",
        description="Limited-magnitude probability-error codes for composite DNA.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to FILE instead of stdout")

    p = sub.add_parser("build", help="build a code and print its report")
    p.add_argument("--spec", required=True, help="JSON code-spec file")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("encode", help="encode message lines")
    p.add_argument("--spec", required=True)
    p.add_argument("--in", dest="infile", help="message file (default stdin)")
    p.add_argument("--quotients", help="comma-separated parity quotient indices")
    common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode received word lines")
    p.add_argument("--spec", required=True)
    p.add_argument("--in", dest="infile", help="received-word file (default stdin)")
    common(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Monte-Carlo channel simulation")
    p.add_argument("--spec", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bounds", help="CSV sweep of SPB and GVB rates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", required=True, help="single value, list, or lo..hi")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--variant", choices=("relaxed", "exact"), default="relaxed")
    p.add_argument("--csv", action="store_true", help="CSV output (default)")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search-gray", help="search for a Gray mapping")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--policy", choices=gray_mod.POLICIES, default="auto")
    common(p)
    p.set_defaults(func=cmd_search_gray)

    p = sub.add_parser("search-critical", help="find critical vectors for l")
    p.add_argument("--l", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_search_critical)

    p = sub.add_parser("tables", help="print classification tables")
    p.add_argument("--what", choices=("class-map", "error-patterns", "reduced"),
                   required=True)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--k", type=int, default=12)
    p.add_argument("--q", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_tables)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except blockcodes.DecodeFailure as exc:
        sys.stderr.write(f"decode failure: {exc}\n")
        return EXIT_DECODE
    except (ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
