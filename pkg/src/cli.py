"""CLI - rank, decompose, verify and the table/bound reproductions from the command line."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from src.config import ROOT, Settings, load_config, load_raw, save_raw
from src.emit import (
    CatalecticantReport,
    HilbertReport,
    RankReport,
    TableReport,
    VerifyReport,
    emit,
)
from src.errors import ParseError, PreconditionError, SingularSystemError, WaringError
from src.hilbert import CIData, hilbert_series, lemma22_check
from src.monomial import (
    catalecticant_ranks,
    coprime_rank_bounds,
    extremal_rank_bruteforce,
    extremal_rank_ternary,
    normalize,
    parse_monomial,
    rank_table,
    waring_rank,
)
from src.store import VerificationCache
from src.waring import (
    Decomposition,
    decompose,
    decompose_linear_product,
    from_document,
    parse_linear_forms,
    to_document,
    verify,
    verify_linear_product,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_ERROR = 2


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError as e:
        raise ParseError(f"bad {what} list {text!r}: {e}") from e
    if not values:
        raise ParseError(f"empty {what} list")
    return values


def _configure_logging(settings: Settings, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.logging.level.upper(), logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def _cache(settings: Settings, project_root: Path | None) -> VerificationCache | None:
    if not settings.cache.enabled:
        return None
    return VerificationCache(settings.cache_path(project_root))


def _check(dec: Decomposition, document: dict, args: argparse.Namespace) -> bool:
    """verify() behind the optional cache; only an identical document hits."""
    cache = _cache(args.settings, args.project_root)
    if cache is not None:
        hit = cache.get(document)
        if hit is not None:
            return hit
    jobs = args.jobs or args.settings.expansion.jobs
    ok = verify(dec, jobs=jobs, chunk_size=args.settings.expansion.chunk_size)
    if cache is not None:
        cache.set(document, ok)
    return ok


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from e


# --- verbs --------------------------------------------------------------------------


def cmd_rank(args: argparse.Namespace) -> int:
    c = normalize(parse_monomial(args.expr))
    print(emit(RankReport(args.expr, c.exponents, waring_rank(c)), args.format))
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    dec = decompose(parse_monomial(args.expr), source=args.expr)
    print(emit(dec, args.format))
    if args.verify and not _check(dec, to_document(dec).model_dump(), args):
        print("error: decomposition failed verification", file=sys.stderr)
        return EXIT_UNVERIFIED
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    text = _read_source(args.file)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"decomposition is not valid JSON: {e}") from e
    if not isinstance(document, dict):
        raise ParseError("decomposition document must be a JSON object")
    dec = from_document(document)
    ok = _check(dec, document, args)
    print(emit(VerifyReport(ok, dec.rank), args.format))
    return EXIT_OK if ok else EXIT_UNVERIFIED


def cmd_hilbert(args: argparse.Namespace) -> int:
    gens = _parse_int_list(args.gens, "generator degree")
    if args.check_lemma:
        # J = (y_1, y_2^a_2, ..., y_n^a_n); the linear generator may be given or left implicit
        a = gens[1:] if gens[0] == 1 else gens
        if args.nvars != len(a) + 1:
            raise PreconditionError(f"--nvars {args.nvars} but the lemma ideal has {len(a) + 1} variables")
        report = HilbertReport(args.nvars, (1,) + a, lemma=lemma22_check(a))
    else:
        ci = CIData(args.nvars, gens)
        upto = args.upto if args.upto is not None else sum(g - 1 for g in gens)
        report = HilbertReport(ci.num_vars, ci.gen_degrees, values=tuple(hilbert_series(ci, upto)))
    print(emit(report, args.format))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    print(emit(coprime_rank_bounds([parse_monomial(e) for e in args.exprs]), args.format))
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace) -> int:
    if args.nvars == 3 and not args.brute_force:
        result = extremal_rank_ternary(args.degree)
    else:
        result = extremal_rank_bruteforce(args.nvars, args.degree)
    print(emit(result, args.format))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if args.dmax < 3:
        raise PreconditionError(f"--dmax must be at least 3, got {args.dmax}")
    print(emit(TableReport(tuple(rank_table(args.dmax))), args.format))
    return EXIT_OK


def cmd_catalecticant(args: argparse.Namespace) -> int:
    c = normalize(parse_monomial(args.expr))
    print(emit(CatalecticantReport(args.expr, tuple(catalecticant_ranks(c)), waring_rank(c)), args.format))
    return EXIT_OK


def cmd_product(args: argparse.Namespace) -> int:
    forms = parse_linear_forms(args.forms)
    cert = decompose_linear_product(forms, _parse_int_list(args.exponents, "exponent"))
    print(emit(cert, args.format))
    if args.verify and not verify_linear_product(cert):
        print("error: linear product certificate failed verification", file=sys.stderr)
        return EXIT_UNVERIFIED
    return EXIT_OK


def cmd_config_get(key: str, project_root: Path | None = None) -> int:
    """Get config value."""
    v = load_raw(project_root)
    for k in key.split("."):
        if isinstance(v, dict):
            v = v.get(k, "")
        else:
            v = ""
            break
    print(v)
    return EXIT_OK


def _coerce(value: str) -> bool | int | float | str:
    if value.lower() in ("true", "false"):
        return value.lower() == "true"
    try:
        return int(value)
    except ValueError:
        try:
            return float(value)
        except ValueError:
            return value


def cmd_config_set(key: str, value: str, project_root: Path | None = None) -> int:
    """Set config value; the result must still validate."""
    settings = load_raw(project_root)
    keys = key.split(".")
    d = settings
    for k in keys[:-1]:
        d = d.setdefault(k, {})
    d[keys[-1]] = _coerce(value)
    try:
        Settings(**settings)
    except ValidationError as e:
        print(f"error: {key} = {value} is not a valid setting\n{e}", file=sys.stderr)
        return EXIT_ERROR
    save_raw(settings, project_root)
    print(f"Set {key} = {value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="waring", description="Waring ranks and decompositions of monomials")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    parser.add_argument("--project-root", type=Path, default=None, help=f"Where config/ lives (default {ROOT})")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["plain", "json", "latex"], default=None, help="Output format (default from config)")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=None, help="Worker processes for the expansion")

    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("rank", parents=[fmt], help="Waring rank of a monomial")
    p.add_argument("expr")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("decompose", parents=[fmt, jobs], help="Explicit sum-of-powers decomposition")
    p.add_argument("expr")
    p.add_argument("--verify", action="store_true", help="Expand the decomposition and check it")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[fmt, jobs], help="Re-verify a decomposition JSON document")
    p.add_argument("file", help="Path, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hilbert", parents=[fmt], help="Hilbert function of a pure-power ideal")
    p.add_argument("--gens", required=True, help="Generator degrees a1,a2,...")
    p.add_argument("--nvars", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--upto", type=int, default=None)
    mode.add_argument("--check-lemma", action="store_true", help="Check the socle-window sum identity")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("bounds", parents=[fmt], help="Rank bounds for a sum of coprime monomials")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("extremal", parents=[fmt], help="Largest monomial rank in a degree")
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("table", parents=[fmt], help="Generic against largest ternary monomial rank")
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("catalecticant", parents=[fmt], help="Catalecticant ranks of a monomial")
    p.add_argument("expr")
    p.set_defaults(func=cmd_catalecticant)

    p = sub.add_parser("product", parents=[fmt], help="Decompose a product of independent linear forms")
    p.add_argument("--forms", required=True, help='Coefficient rows, e.g. "1,1;1,-1"')
    p.add_argument("--exponents", required=True, help="b1,b2,...")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_product)

    cfg = sub.add_parser("config", help="Get/set config")
    cfg.add_argument("action", choices=["get", "set"])
    cfg.add_argument("key")
    cfg.add_argument("value", nargs="*", default=[])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.cmd == "config":
        if args.action == "get":
            return cmd_config_get(args.key, args.project_root)
        val = " ".join(args.value) if args.value else ""
        if not val:
            print("error: config set requires a value", file=sys.stderr)
            return EXIT_ERROR
        return cmd_config_set(args.key, val, args.project_root)

    try:
        args.settings = load_config(args.project_root)
    except ValidationError as e:
        print(f"error: invalid settings.yaml\n{e}", file=sys.stderr)
        return EXIT_ERROR
    _configure_logging(args.settings, args.verbose)
    args.format = args.format or args.settings.output.format
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_ERROR

    try:
        return args.func(args)
    except SingularSystemError:
        logger.exception("internal error in %s", args.cmd)
        raise
    except WaringError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
