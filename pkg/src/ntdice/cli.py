"""Command-line front end: verify, gen, fib, search, realize.

Exit codes are uniform across commands: 0 for a positive result (balanced
non-transitive verdict, successful construction, witness found), 1 for a
negative result, 2 for usage or parse errors. JSON output is canonical:
fixed key order, labels descending, and odds always as exact integer pairs
with a ``display`` string, never floats.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    ALPHABET,
    Classification,
    DiceSet,
    WinOdds,
    Word,
    beat_count,
    cycle_odds,
    dice_of_word,
    face_sums,
    validate_dice,
    verify,
)
from .construct import construct_balanced_nontransitive, fibonacci_balanced, fibonacci_savage
from .errors import (
    BudgetExceeded,
    DiceError,
    MalformedWord,
    SidesTooSmall,
    TournamentSpecError,
)
from .search import (
    Tournament,
    balanced_nontransitive_words,
    enumerate_words,
    is_irreducible,
    iter_words,
    majority_digraph,
    realize_k3,
    search_realization,
)

DICE_SCHEMA = "dice-set/1"
VERDICT_SCHEMA = "dice-verdict/1"
CENSUS_SCHEMA = "dice-census/1"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class InputError(Exception):
    """Input that cannot be parsed as dice, a word, or a document."""


# -- input parsing ------------------------------------------------------------

def parse_dice_input(text: str) -> DiceSet:
    """Accept a JSON document, ``a: 9 5 1`` rows, or a bare word."""
    stripped = text.strip()
    if not stripped:
        raise InputError("empty input")
    if stripped.startswith("{"):
        return _parse_document(stripped)
    if ":" in stripped:
        return _parse_rows(stripped)
    try:
        return dice_of_word(Word.from_string(stripped))
    except MalformedWord as exc:
        raise InputError(f"bad word: {exc}") from exc


def _parse_document(text: str) -> DiceSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"bad JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise InputError("JSON input must be an object")
    if doc.get("schema") != DICE_SCHEMA:
        raise InputError(f"expected schema {DICE_SCHEMA!r}, got {doc.get('schema')!r}")
    dice = doc.get("dice")
    if not isinstance(dice, dict) or not dice:
        raise InputError("document field 'dice' must map letters to label arrays")
    m = len(dice)
    expected_letters = list(ALPHABET[:m])
    if sorted(dice) != expected_letters:
        raise InputError(
            f"dice letters must be exactly {expected_letters}, got {sorted(dice)}"
        )
    rows = [dice[ch] for ch in expected_letters]
    try:
        result = validate_dice(rows)
    except DiceError as exc:
        raise InputError(str(exc)) from exc
    for field in ("m", "n"):
        if field in doc and doc[field] != getattr(result, field):
            raise InputError(
                f"document field {field!r} is {doc[field]}, "
                f"but the dice imply {getattr(result, field)}"
            )
    return result


def _parse_rows(text: str) -> DiceSet:
    rows: dict[str, list[int]] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        for segment in line.split("/"):
            segment = segment.strip()
            if not segment:
                continue
            head, _, tail = segment.partition(":")
            letter = head.strip().lower()
            if len(letter) != 1 or letter not in ALPHABET:
                raise InputError(f"line {lineno}: bad die name {head.strip()!r}")
            if letter in rows:
                raise InputError(f"line {lineno}: die {letter!r} given twice")
            labels = []
            for token in tail.split():
                try:
                    labels.append(int(token))
                except ValueError:
                    raise InputError(
                        f"line {lineno}: bad label {token!r} on die {letter!r}"
                    ) from None
            rows[letter] = labels
    if not rows:
        raise InputError("no dice rows found")
    expected = list(ALPHABET[: len(rows)])
    if sorted(rows) != expected:
        raise InputError(f"dice must be named {expected}, got {sorted(rows)}")
    try:
        return validate_dice([rows[ch] for ch in expected])
    except DiceError as exc:
        raise InputError(str(exc)) from exc


def _read_input(source: str) -> str:
    import os

    if source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source, encoding="utf-8") as handle:
            return handle.read()
    return source


# -- output rendering ---------------------------------------------------------

def _odds_json(odds: WinOdds) -> dict:
    return {"wins": odds.wins, "trials": odds.trials, "display": odds.display}


def dice_document(dice_set: DiceSet, annotations: dict | None = None) -> dict:
    doc = {
        "schema": DICE_SCHEMA,
        "m": dice_set.m,
        "n": dice_set.n,
        "dice": {ALPHABET[i]: list(row) for i, row in enumerate(dice_set.dice)},
    }
    if annotations:
        doc["annotations"] = annotations
    return doc


def _cycle_odds_annotation(dice_set: DiceSet) -> list[dict]:
    out = []
    for i, odds in enumerate(cycle_odds(dice_set)):
        j = (i + 1) % dice_set.m
        out.append({"pair": f"{ALPHABET[i]}>{ALPHABET[j]}", **_odds_json(odds)})
    return out


def _render_dice_text(dice_set: DiceSet, annotations: dict | None = None) -> str:
    lines = [
        f"{ALPHABET[i]}: " + " ".join(str(v) for v in row)
        for i, row in enumerate(dice_set.dice)
    ]
    for key, value in (annotations or {}).items():
        if key == "cycle_odds":
            pretty = ", ".join(f"{o['pair']} {o['display']}" for o in value)
            lines.append(f"# cycle odds: {pretty}")
        elif key == "face_sums":
            lines.append(f"# face sums: {' '.join(str(v) for v in value)}")
        elif key == "pairwise_odds":
            pretty = ", ".join(f"{o['pair']} {o['display']}" for o in value)
            lines.append(f"# pairwise odds: {pretty}")
        else:
            lines.append(f"# {key.replace('_', ' ')}: {value}")
    return "\n".join(lines)


def _emit_dice(dice_set: DiceSet, annotations: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(dice_document(dice_set, annotations), indent=2))
    else:
        print(_render_dice_text(dice_set, annotations))


# -- subcommands ---------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    try:
        dice_set = parse_dice_input(_read_input(args.input))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdict = verify(dice_set)
    sums = face_sums(dice_set)
    if args.format == "json":
        doc = {
            "schema": VERDICT_SCHEMA,
            "m": dice_set.m,
            "n": dice_set.n,
            "verdict": verdict.classification.value,
            "method": verdict.method,
            "face_sums": list(sums),
            "odds": _odds_json(verdict.witness_odds) if verdict.witness_odds else None,
            "suggested_relabeling": (
                [ALPHABET[i] for i in verdict.suggested_relabeling]
                if verdict.suggested_relabeling
                else None
            ),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"verdict: {verdict.classification.value}")
        print(f"face-sums: {' '.join(str(s) for s in sums)}")
        if verdict.witness_odds is not None:
            print(f"odds: {verdict.witness_odds.display}")
        if verdict.suggested_relabeling is not None:
            order = " ".join(ALPHABET[i] for i in verdict.suggested_relabeling)
            print(f"suggestion: reorder dice as {order}")
    positive = verdict.classification is Classification.BALANCED_NONTRANSITIVE
    return EXIT_OK if positive else EXIT_NEGATIVE


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        dice_set = construct_balanced_nontransitive(args.sides, args.dice)
    except SidesTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    annotations = {
        "command": f"gen --sides {args.sides} --dice {args.dice}",
        "cycle_odds": _cycle_odds_annotation(dice_set),
        "face_sums": list(face_sums(dice_set)),
    }
    _emit_dice(dice_set, annotations, args.format)
    return EXIT_OK


def cmd_fib(args: argparse.Namespace) -> int:
    try:
        if args.balanced:
            dice_set = fibonacci_balanced(args.k)
        else:
            dice_set = fibonacci_savage(args.k)
    except DiceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    flag = " --balanced" if args.balanced else ""
    annotations = {
        "command": f"fib --k {args.k}{flag}",
        "face_sums": list(face_sums(dice_set)),
        "cycle_odds": _cycle_odds_annotation(dice_set),
    }
    _emit_dice(dice_set, annotations, args.format)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    if args.irreducible_only and not args.list:
        print("error: --irreducible-only requires --list", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.list:
            if args.irreducible_only:
                for letters in balanced_nontransitive_words(
                    args.sides, args.dice, budget=args.budget
                ):
                    if is_irreducible(Word(letters, args.dice)):
                        print(letters)
            else:
                for letters in iter_words(args.sides, args.dice, budget=args.budget):
                    print(letters)
            return EXIT_OK
        census = enumerate_words(
            args.sides, args.dice, budget=args.budget, jobs=args.jobs
        )
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        doc = {
            "schema": CENSUS_SCHEMA,
            "n": census.n,
            "m": census.m,
            "total_words": census.total_words,
            "balanced": census.balanced,
            "nontransitive": census.nontransitive,
            "balanced_nontransitive": census.balanced_nontransitive,
            "irreducible_bnt": census.irreducible_bnt,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"n: {census.n}")
        print(f"m: {census.m}")
        print(f"total-words: {census.total_words}")
        print(f"balanced: {census.balanced}")
        print(f"nontransitive: {census.nontransitive}")
        print(f"balanced-nontransitive: {census.balanced_nontransitive}")
        print(f"irreducible: {census.irreducible_bnt}")
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    try:
        tournament = Tournament.from_text(args.tournament)
    except TournamentSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if tournament.m == 3:
            dice_set = realize_k3(tournament, args.sides)
        else:
            dice_set = search_realization(tournament, args.sides, budget=args.budget)
    except (SidesTooSmall, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if dice_set is None:
        print("none")
        return EXIT_NEGATIVE
    if majority_digraph(dice_set) != tournament.edges:
        print("error: realization failed its self-check", file=sys.stderr)
        return EXIT_USAGE
    pairwise = []
    n2 = dice_set.n * dice_set.n
    for i, j in sorted(tournament.edges):
        wins = beat_count(dice_set, i, j)
        pairwise.append(
            {
                "pair": f"{ALPHABET[i]}>{ALPHABET[j]}",
                "wins": wins,
                "trials": n2,
                "display": f"{wins}/{n2}",
            }
        )
    annotations = {
        "command": f"realize --tournament {args.tournament} --sides {args.sides}",
        "pairwise_odds": pairwise,
    }
    _emit_dice(dice_set, annotations, args.format)
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ntdice",
        description="Construct, verify, and search balanced non-transitive dice.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify", help="classify dice given as a file, JSON, rows, word, or - (stdin)"
    )
    p_verify.add_argument("input", help="file path, '-' for stdin, or inline dice/word")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="construct a balanced non-transitive set")
    p_gen.add_argument("--sides", type=int, required=True)
    p_gen.add_argument("--dice", type=int, choices=(3, 4), default=3)
    p_gen.add_argument("--format", choices=("text", "json"), default="text")
    p_gen.set_defaults(func=cmd_gen)

    p_fib = sub.add_parser("fib", help="Fibonacci block constructions")
    p_fib.add_argument("--k", type=int, required=True, help="Fibonacci index, f(1)=f(2)=1")
    p_fib.add_argument(
        "--balanced", action="store_true", help="apply the balancing swap (odd k >= 5)"
    )
    p_fib.add_argument("--format", choices=("text", "json"), default="text")
    p_fib.set_defaults(func=cmd_fib)

    p_search = sub.add_parser("search", help="exhaustive census or word listing")
    p_search.add_argument("--sides", type=int, required=True)
    p_search.add_argument("--dice", type=int, default=3)
    mode = p_search.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the census (default)")
    mode.add_argument("--list", action="store_true", help="stream words, one per line")
    p_search.add_argument(
        "--irreducible-only",
        action="store_true",
        help="with --list: only irreducible balanced non-transitive words",
    )
    p_search.add_argument("--budget", type=int, default=10 ** 8)
    p_search.add_argument("--jobs", type=int, default=1)
    p_search.add_argument("--format", choices=("text", "json"), default="text")
    p_search.set_defaults(func=cmd_search)

    p_realize = sub.add_parser("realize", help="find dice realizing a tournament")
    p_realize.add_argument(
        "--tournament", required=True, help="directed pairs, e.g. '1>2,2>3,3>1'"
    )
    p_realize.add_argument("--sides", type=int, required=True)
    p_realize.add_argument("--budget", type=int, default=10 ** 8)
    p_realize.add_argument("--format", choices=("text", "json"), default="text")
    p_realize.set_defaults(func=cmd_realize)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
