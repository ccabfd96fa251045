"""Command-line front end: compute, validate, gen, bench.

Input conventions: arrays are whitespace/newline-separated signed decimal
integers; words are ASCII letters, or integers with --ints.  "-" reads stdin.
Reports are plain text key=value lines led by a format=1 header; the verdict
line is byte-identical across the border-array engines on identical input.

Exit codes: 0 valid, 1 invalid, 2 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import families
from .border_core import compute_pi, pi_to_pi_prime, text_to_word
from .pi_online import OnlineValidator
from .pi_prime_online import SlopeValidator, validate_g_stream
from .pi_realtime import RealTimeValidator
from .pi_succinct import SuccinctValidator

__all__ = ["main"]

EXIT_VALID = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class CliError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _parse_ints(text: str, path: str) -> list[int]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for tok in line.split():
            try:
                out.append(int(tok))
            except ValueError:
                raise CliError(f"{path}:{lineno}: not an integer: {tok!r}") from None
    return out


def _parse_word(text: str, path: str, as_ints: bool):
    if as_ints:
        word = tuple(_parse_ints(text, path))
        if any(s < 1 for s in word):
            raise CliError(f"{path}: word symbols must be positive integers")
        return word
    letters = "".join(text.split())
    try:
        return text_to_word(letters)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------


def _cmd_compute(args) -> int:
    word = _parse_word(_read_text(args.input), args.input, args.ints)
    values = compute_pi(word)
    if args.kind == "pi_prime":
        values = pi_to_pi_prime(values)
    print("\n".join(str(v) for v in values))
    return EXIT_VALID


def _make_engine(args):
    n_max = args.n_max
    if args.engine == "basic":
        return OnlineValidator(instrument=args.instrument)
    if args.engine == "realtime":
        return RealTimeValidator(n_max=n_max, instrument=args.instrument)
    if args.engine == "succinct":
        return SuccinctValidator(n_max=n_max, lazy=args.lazy_copy, instrument=args.instrument)
    return SlopeValidator(instrument=args.instrument)


def _cmd_validate(args) -> int:
    if args.kind in ("pi_prime", "g"):
        if args.engine != "slope":
            raise CliError(f"kind {args.kind} requires --engine slope")
    elif args.engine == "slope":
        raise CliError("engine slope validates pi_prime or g streams only")
    values = _parse_ints(_read_text(args.input), args.input)
    t0 = time.perf_counter()

    if args.kind == "g":
        verdict, engine = validate_g_stream(values)
    else:
        engine = _make_engine(args)
        verdict = None
        for v in values:
            verdict = engine.push(v)
            if not verdict.valid:
                break
        if verdict is None:  # empty stream
            from .pi_online import Verdict

            verdict = Verdict(True, max_alphabet=0)
    wall = time.perf_counter() - t0

    lines = ["format=1", f"kind={args.kind}", f"engine={args.engine}"]
    if verdict.valid:
        lines.append(f"verdict=valid n={len(values)} min_alphabet={verdict.max_alphabet}")
    else:
        lines.append(f"verdict=invalid@{verdict.position} n={len(values)}")
    if verdict.valid and args.emit_pi and args.kind in ("pi_prime", "g"):
        rec = engine.recovered_pi()
        lines.append("recovered_pi=" + " ".join(str(v) for v in rec))
    if verdict.valid and args.emit_witness and args.kind == "pi":
        lines.append("witness=" + " ".join(str(s) for s in engine.witness()))
    if args.instrument:
        lines.extend(_instrument_lines(engine))
    lines.append(f"wall_ms={wall * 1000:.1f}")
    print("\n".join(lines))
    return EXIT_VALID if verdict.valid else EXIT_INVALID


def _instrument_lines(engine) -> list[str]:
    out = []
    if isinstance(engine, RealTimeValidator):
        c = engine.op_counters()
        out.append(f"max_delay_ops={c['core_push_max']}")
        out.append(f"la_ops_max={c['la_push_max']}")
        out.append(f"total_ops={c['core_total'] + c['la_total']}")
    elif isinstance(engine, SuccinctValidator):
        m = engine.memory_bits()
        out.append(f"memory_bits={m['total_used']}")
        out.append(f"memory_bits_allocated={m['blocks_allocated_formula'] + m['per_position']}")
        out.append(f"blocks_created={m['blocks_created']}")
        out.append(f"chase_max={engine.chase_max}")
    elif isinstance(engine, SlopeValidator):
        out.append(f"total_ops={engine.ops_total + engine._sfx.ops_total}")
        out.append(f"dominance_ops={engine.dom_inserts + engine.dom_removals}")
    elif isinstance(engine, OnlineValidator):
        out.append(f"max_delay_ops={engine.ops_push_max}")
        out.append(f"total_ops={engine.ops_total}")
        out.append(f"memory_bits={engine.footprint_bits()}")
    return out


def _cmd_gen(args) -> int:
    n, seed = args.n, args.seed
    if n < 1:
        raise CliError("--n must be >= 1")
    fam = args.family
    if fam == "lowerbound_pair":
        try:
            valid, invalid, pos = families.lowerbound_pair(n, seed)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        if not args.out:
            raise CliError("lowerbound_pair needs --out PREFIX (writes two files)")
        for name, arr in (("a", valid), ("b", invalid)):
            with open(f"{args.out}.{name}.txt", "w", encoding="ascii") as fh:
                fh.write("\n".join(str(v) for v in arr) + "\n")
        # declare the valid member by actually validating, not by construction
        checker = OnlineValidator()
        ok_a = all(checker.push(v).valid for v in valid)
        print(f"format=1\nfamily=lowerbound_pair n={n} seed={seed}")
        print(f"valid_member={'a' if ok_a else 'b'}")
        print(f"invalid_position={pos}")
        return EXIT_VALID

    if fam == "unary":
        values = families.unary_pi(n)
        word = None
    elif fam == "random_valid_pi":
        values = families.random_valid_pi(n, seed, unary_bias=args.unary_bias)
        word = None
    elif fam == "fibonacci":
        word = families.fibonacci_word(n)
        values = None
    elif fam == "thue_morse":
        word = families.thue_morse_word(n)
        values = None
    else:  # random_word
        word = families.random_word(n, args.sigma, seed)
        values = None

    emit = args.emit
    if emit == "auto":
        emit = "pi" if word is None else "word"
    if emit == "word":
        if word is None:
            raise CliError(f"family {fam} generates an array, not a word")
        print("\n".join(str(s) for s in word))
    else:
        if values is None:
            values = compute_pi(word)
            if emit == "pi_prime":
                values = pi_to_pi_prime(values)
        elif emit == "pi_prime":
            values = pi_to_pi_prime(values)
        print("\n".join(str(v) for v in values))
    return EXIT_VALID


def _cmd_bench(args) -> int:
    ns = [int(tok) for tok in args.n_list.split(",")]
    print("engine family n verdict max_delay_ops la_ops_max total_ops memory_bits wall_ms")
    for n in ns:
        if args.family == "unary":
            arr = families.unary_pi(n)
        elif args.family == "fibonacci":
            arr = compute_pi(families.fibonacci_word(n))
        elif args.family == "random_valid_pi":
            arr = families.random_valid_pi(n, args.seed)
        elif args.family == "random_pi_prime":
            arr = families.random_valid_pi_prime(n, args.seed)
        else:
            raise CliError(f"unknown bench family {args.family}")

        if args.engine == "slope":
            if args.family != "random_pi_prime":
                raise CliError("engine slope benches the random_pi_prime family")
            eng = SlopeValidator(instrument=True)
        elif args.engine == "realtime":
            eng = RealTimeValidator(n_max=n, instrument=True)
        elif args.engine == "succinct":
            eng = SuccinctValidator(n_max=n, lazy=args.lazy_copy, instrument=True)
        else:
            eng = OnlineValidator(instrument=True)

        t0 = time.perf_counter()
        verdict = None
        for v in arr:
            verdict = eng.push(v)
            if not verdict.valid:
                break
        wall = (time.perf_counter() - t0) * 1000
        delay = la_max = total = mem = 0
        if isinstance(eng, RealTimeValidator):
            c = eng.op_counters()
            delay, la_max, total = c["core_push_max"], c["la_push_max"], c["core_total"] + c["la_total"]
        elif isinstance(eng, SuccinctValidator):
            mem = eng.memory_bits()["total_used"]
            total = eng.ops_total
        elif isinstance(eng, SlopeValidator):
            total = eng.ops_total + eng._sfx.ops_total
        else:
            delay, total, mem = eng.ops_push_max, eng.ops_total, eng.footprint_bits()
        word = "valid" if (verdict is None or verdict.valid) else f"invalid@{verdict.position}"
        print(f"{args.engine} {args.family} {n} {word} {delay} {la_max} {total} {mem} {wall:.1f}")
    return EXIT_VALID


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="borderval", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="border or strict array of a word")
    p.add_argument("--kind", choices=["pi", "pi_prime"], required=True)
    p.add_argument("--ints", action="store_true", help="word given as integer symbols")
    p.add_argument("input", help="word file or - for stdin")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("validate", help="stream an array through a validator")
    p.add_argument("--kind", choices=["pi", "pi_prime", "g"], required=True)
    p.add_argument("--engine", choices=["basic", "realtime", "succinct", "slope"], required=True)
    p.add_argument("--emit-pi", action="store_true", help="print the recovered border array")
    p.add_argument("--emit-witness", action="store_true", help="print a witness word")
    p.add_argument("--format", choices=["text"], default="text")
    p.add_argument("--instrument", action="store_true")
    p.add_argument("--lazy-copy", action="store_true")
    p.add_argument("--n-max", type=int, default=2**32)
    p.add_argument("input", help="array file or - for stdin")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("gen", help="emit a test family")
    p.add_argument(
        "--family",
        choices=["unary", "fibonacci", "thue_morse", "random_word", "random_valid_pi", "lowerbound_pair"],
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--unary-bias", type=float, default=0.0)
    p.add_argument("--emit", choices=["auto", "word", "pi", "pi_prime"], default="auto")
    p.add_argument("--out", help="output prefix (required for lowerbound_pair)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="instrumentation table over an n range")
    p.add_argument("--engine", choices=["basic", "realtime", "succinct", "slope"], required=True)
    p.add_argument("--family", choices=["unary", "fibonacci", "random_valid_pi", "random_pi_prime"], required=True)
    p.add_argument("--n-list", required=True, help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lazy-copy", action="store_true")
    p.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
