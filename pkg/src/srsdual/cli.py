"""Command-line front end.

Exit codes follow one contract across all verbs: 0 for a decided-yes or a
plain success, 1 for a decided-no, 2 for errors, class violations and
anything the toolkit cannot certify. Words on the command line use file
syntax: space-separated tokens, ``_`` for the empty word.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import selftest
from .errors import SrsError
from .fixed_point import solve_fp_dwindling
from .monadic import solve_ce_one, solve_ce_two, solve_ct_monadic
from .oracle import OracleQuery, oracle_search
from .reductions import encode_dlba_to_srs, encode_gpcp_to_ce, encode_gpcp_to_ct, \
    parse_dlba, parse_gpcp
from .srs import DEFAULT_FUEL, Srs, check_convergence, classify, format_srs, \
    normalize, parse_srs
from .words import word, word_str

YES, NO, ERROR = 0, 1, 2


def _load_srs(path: str) -> Srs:
    return parse_srs(Path(path).read_text(encoding="utf-8"))


def _emit(args, record: dict, human: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True, ensure_ascii=False))
    else:
        print(human)


def _witness_record(ws) -> list[str]:
    return [word_str(w) for w in ws]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="srsdual",
        description="decision procedures dual to unification over string rewriting systems",
    )
    parser.add_argument("--json", action="store_true", help="one-line machine-readable output")
    parser.add_argument("--fuel", type=int, default=DEFAULT_FUEL, help="rewrite step budget")
    parser.add_argument("--max-len", type=int, default=8, help="oracle word-length bound")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="report the class flags of a system")
    p.add_argument("srs_file")

    p = sub.add_parser("normalize", help="print the normal form of a word")
    p.add_argument("srs_file")
    p.add_argument("word")

    p = sub.add_parser("confluence", help="check termination evidence and local confluence")
    p.add_argument("srs_file")

    p = sub.add_parser("fp", help="fixed point for a dwindling convergent system")
    p.add_argument("srs_file")
    p.add_argument("alpha")

    p = sub.add_parser("ct", help="common term for a monadic convergent system")
    p.add_argument("srs_file")
    p.add_argument("alpha")
    p.add_argument("beta")

    p = sub.add_parser("ce2", help="two-mapping common equation")
    p.add_argument("srs_file")
    p.add_argument("alpha1")
    p.add_argument("alpha2")
    p.add_argument("beta1")
    p.add_argument("beta2")

    p = sub.add_parser("ce1", help="one-mapping common equation")
    p.add_argument("srs_file")
    p.add_argument("alpha")
    p.add_argument("beta")

    p = sub.add_parser("encode", help="run a reduction encoder")
    p.add_argument("kind", choices=["gpcp-ct", "gpcp-ce", "dlba-fp"])
    p.add_argument("instance_file")
    p.add_argument("-o", "--output", required=True, help="output .srs path")

    p = sub.add_parser("oracle", help="bounded brute-force search")
    p.add_argument("mode", choices=["fp", "ct", "ce_two", "ce_one"])
    p.add_argument("srs_file")
    p.add_argument("words", nargs="+")

    sub.add_parser("selftest", help="run the acceptance sweeps")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except SrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def _dispatch(args) -> int:
    if args.verb == "classify":
        cls = classify(_load_srs(args.srs_file))
        record = {"verdict": "ok", **cls.__dict__}
        _emit(args, record, "\n".join(f"{k}: {v}" for k, v in cls.__dict__.items()))
        return YES

    if args.verb == "normalize":
        r = _load_srs(args.srs_file)
        nf = normalize(r, word(args.word), args.fuel)
        _emit(args, {"verdict": "ok", "normal_form": word_str(nf)}, word_str(nf))
        return YES

    if args.verb == "confluence":
        ev = check_convergence(_load_srs(args.srs_file), args.fuel)
        record = {"terminating": ev.terminating,
                  "locally_confluent": ev.locally_confluent}
        _emit(args, record,
              f"terminating: {ev.terminating}\nlocally confluent: {ev.locally_confluent}")
        if ev.locally_confluent is True:
            return YES
        return NO if ev.locally_confluent is False else ERROR

    if args.verb == "fp":
        r = _load_srs(args.srs_file)
        sol = solve_fp_dwindling(r, word(args.alpha), fuel=args.fuel)
        if sol is None:
            _emit(args, {"verdict": "no", "witnesses": []}, "no fixed point")
            return NO
        _emit(args, {"verdict": "yes", "witnesses": _witness_record([sol.w]),
                     "iterations": sol.iterations, "verified": sol.verified},
              f"fixed point: {word_str(sol.w)}  (iterations: {sol.iterations})")
        return YES

    if args.verb == "ct":
        r = _load_srs(args.srs_file)
        sol = solve_ct_monadic(r, word(args.alpha), word(args.beta), fuel=args.fuel)
        if sol is None:
            _emit(args, {"verdict": "no", "witnesses": []}, "no common multiplier")
            return NO
        _emit(args, {"verdict": "yes", "witnesses": _witness_record([sol.w])},
              f"common multiplier: {word_str(sol.w)}")
        return YES

    if args.verb == "ce2":
        r = _load_srs(args.srs_file)
        sol = solve_ce_two(r, word(args.alpha1), word(args.alpha2),
                           word(args.beta1), word(args.beta2), fuel=args.fuel)
        if sol is None:
            _emit(args, {"verdict": "no", "witnesses": []}, "no common equation")
            return NO
        _emit(args, {"verdict": "yes", "witnesses": _witness_record([sol.x, sol.y])},
              f"X = {word_str(sol.x)}\nY = {word_str(sol.y)}")
        return YES

    if args.verb == "ce1":
        r = _load_srs(args.srs_file)
        sol = solve_ce_one(r, word(args.alpha), word(args.beta), fuel=args.fuel)
        if sol is None:
            _emit(args, {"verdict": "no", "witnesses": []}, "no common equation")
            return NO
        _emit(args, {"verdict": "yes", "witnesses": _witness_record([sol.x, sol.y])},
              f"W1 = {word_str(sol.x)}\nW2 = {word_str(sol.y)}")
        return YES

    if args.verb == "encode":
        text = Path(args.instance_file).read_text(encoding="utf-8")
        if args.kind == "dlba-fp":
            machine = parse_dlba(text)
            srs = encode_dlba_to_srs(machine)
            legend = {q: "machine state" for q in sorted(machine.states)}
        else:
            inst = parse_gpcp(text)
            enc = encode_gpcp_to_ct(inst) if args.kind == "gpcp-ct" else encode_gpcp_to_ce(inst)
            srs, legend = enc.srs, dict(enc.symbol_legend)
            legend["__alpha__"] = word_str(enc.alpha)
            legend["__beta__"] = word_str(enc.beta)
        out = Path(args.output)
        out.write_text(format_srs(srs), encoding="utf-8")
        side = out.with_suffix(out.suffix + ".legend.json")
        side.write_text(json.dumps(legend, indent=2, ensure_ascii=False, sort_keys=True) + "\n",
                        encoding="utf-8")
        _emit(args, {"verdict": "ok", "rules": len(srs.rules),
                     "output": str(out), "legend": str(side)},
              f"wrote {len(srs.rules)} rules to {out} (legend: {side})")
        return YES

    if args.verb == "oracle":
        r = _load_srs(args.srs_file)
        q = OracleQuery(args.mode, r, tuple(word(w) for w in args.words),
                        args.max_len, args.fuel)
        ans = oracle_search(q)
        record = {"verdict": "yes" if ans.found else "no",
                  "witnesses": _witness_record(ans.witnesses),
                  "words_examined": ans.words_examined}
        _emit(args, record,
              ("witnesses: " + ", ".join(record["witnesses"]) if ans.found else "no witness")
              + f"  ({ans.words_examined} candidates)")
        return YES if ans.found else NO

    if args.verb == "selftest":
        results = selftest.run_all()
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed")
        return YES if passed == len(results) else NO

    raise AssertionError("unhandled verb")


if __name__ == "__main__":
    sys.exit(main())
