"""Command-line front end.

Subcommands: chambers, classify, verify, figure, solve-class, canonical.
Exit codes: 0 success / verification pass, 1 verification failure,
2 usage or parse error.  Rationals are accepted as integers or "p/q".
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .catalog import (
    CatalogError,
    CatalogParseError,
    CatalogValidationError,
    REGIMES,
    canonical_class,
    load,
)
from .figures import render_svg
from .inference import (
    SoundnessError,
    classify_class,
    decompose,
    default_decomposition,
    verify_decomposition,
)
from .linalg import Cone, SingularSystemError, membership, ns, solve_class

__all__ = ["main"]

USAGE_ERROR = 2
VERIFY_ERROR = 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sblocus",
        description=(
            "Exact stable-base-locus chamber decompositions for spaces of "
            "degree 2 and 3 rational curves in Grassmannians."
        ),
        epilog=(
            "Divisor classes are written in the basis (H11, H2, Delta); "
            "ray names on the command line are H11, H2, T, Delta, Ddeg, Dunb, "
            "P, F, S, S', U, U', R, V, V'."
        ),
    )
    parser.add_argument(
        "--catalog",
        metavar="FILE",
        help="catalog override file merged into the built-in data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chambers", help="print the chamber table for a space")
    p.add_argument("space", choices=REGIMES)

    p = sub.add_parser("classify", help="locate a divisor class a*H11 + b*H2 + c*Delta")
    # Let negative rationals like -1/4 parse as positionals, not option flags.
    p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    p.add_argument("space", choices=REGIMES)
    p.add_argument("a", type=_fraction)
    p.add_argument("b", type=_fraction)
    p.add_argument("c", type=_fraction)

    p = sub.add_parser("verify", help="verify the decomposition against its table")
    p.add_argument("space", choices=REGIMES)
    p.add_argument("-o", "--output", metavar="FILE", help="also write a JSON report")

    p = sub.add_parser("figure", help="emit an SVG cross-section figure")
    p.add_argument("space", choices=REGIMES)
    p.add_argument("-o", "--output", metavar="FILE", required=True)

    p = sub.add_parser("solve-class", help="solve for a class from curve rows and values")
    p.add_argument("file", help="text file: three lines 'r1 r2 r3 value'")

    p = sub.add_parser("canonical", help="canonical class and its position vs the nef cone")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)

    return parser


def _get_decomposition(space: str, catalog_path):
    if catalog_path is None:
        return default_decomposition(space)
    return decompose(load(space, catalog_path))


def _cmd_chambers(args) -> int:
    dec = _get_decomposition(args.space, args.catalog)
    report = verify_decomposition(dec)
    catalog = dec.catalog
    item_of = {m.chamber_index: m for m in report.per_chamber}
    print(f"# {args.space}: {len(dec.chambers)} chambers")
    print("item | rays | stable base locus | status")
    rows = sorted(
        dec.chambers,
        key=lambda ch: (
            item_of[ch.index].item_id is None,
            item_of[ch.index].item_id or 0,
            ch.index,
        ),
    )
    for ch in rows:
        m = item_of[ch.index]
        item = str(m.item_id) if m.item_id is not None else "?"
        rays = " ".join(m.rays) if m.rays else "-"
        print(
            f"{item} | {rays} | {catalog.format_locus_set(ch.label)} | {ch.resolution}"
        )
    return 0


def _cmd_classify(args) -> int:
    dec = _get_decomposition(args.space, args.catalog)
    catalog = dec.catalog
    D = ns(args.a, args.b, args.c)
    if D.is_zero():
        print("usage error: zero class", file=sys.stderr)
        return USAGE_ERROR
    result = classify_class(D, dec)
    if result["kind"] == "not_effective":
        print("not effective")
        return 0
    lab = result["label"]
    locus = catalog.format_locus_set(lab.lower)
    if result["kind"] == "vertex":
        name = result["ray"]
        where = f"ray {name}" if name else "arrangement vertex"
        print(f"{where}; stable base locus {locus}")
    elif result["kind"] == "edge":
        report = verify_decomposition(dec)
        item_of = {m.chamber_index: m.item_id for m in report.per_chamber}
        sides = ", ".join(
            f"item {item_of.get(ci, '?')}" for ci in result["chambers"]
        )
        print(f"wall between {sides}; stable base locus {locus}")
    else:
        report = verify_decomposition(dec)
        item_of = {m.chamber_index: m.item_id for m in report.per_chamber}
        item = item_of.get(result["chamber"].index)
        status = result["label"].status
        print(f"chamber {item}; stable base locus {locus}; {status}")
    return 0


def _cmd_verify(args) -> int:
    dec = _get_decomposition(args.space, args.catalog)
    report = verify_decomposition(dec)
    print(report.to_text(dec.catalog))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(report.to_json(dec.catalog) + "\n")
    return 0 if report.passed else VERIFY_ERROR


def _cmd_figure(args) -> int:
    dec = _get_decomposition(args.space, args.catalog)
    report = verify_decomposition(dec)
    svg = render_svg(dec, report)
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(svg)
    print(f"wrote {args.output} ({len(dec.chambers)} chambers)")
    return 0


def _cmd_solve_class(args) -> int:
    rows = []
    values = []
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            for raw in handle:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                line = line.replace("=", " ")
                toks = line.split()
                if len(toks) != 4:
                    print(
                        f"parse error: expected 'r1 r2 r3 value', got {raw.strip()!r}",
                        file=sys.stderr,
                    )
                    return USAGE_ERROR
                rows.append(tuple(Fraction(t) for t in toks[:3]))
                values.append(Fraction(toks[3]))
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, ZeroDivisionError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if len(rows) != 3:
        print(f"need exactly 3 rows, got {len(rows)}", file=sys.stderr)
        return USAGE_ERROR
    try:
        cls = solve_class(rows, values)
    except SingularSystemError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    print(str(cls))
    return 0


def _cmd_canonical(args) -> int:
    k, n, d = args.k, args.n, args.d
    in_regime = (d == 2 and 2 <= k and k + 2 <= n) or (
        d == 3 and ((k >= 3 and k + 3 <= n) or (k == 2 and n >= 5))
    )
    if not in_regime:
        print(f"(k, n, d) = ({k}, {n}, {d}) is out of range", file=sys.stderr)
        return USAGE_ERROR
    K = canonical_class(k, n, d)
    regime = "deg2" if d == 2 else ("deg3_lines" if k == 2 else "deg3_general")
    catalog = load(regime)
    nef = Cone(catalog.nef_generators())
    position = membership(-K, nef)
    phrase = {
        "interior": "lies in the interior of",
        "boundary": "lies on the boundary of",
        "outside": "lies outside",
    }[position]
    print(f"K = {K}")
    print(f"-K = {-K} {phrase} the nef cone c(H11, H2, T)")
    return 0


_COMMANDS = {
    "chambers": _cmd_chambers,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "figure": _cmd_figure,
    "solve-class": _cmd_solve_class,
    "canonical": _cmd_canonical,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CatalogParseError as exc:
        print(f"catalog parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except CatalogValidationError as exc:
        print(f"catalog invalid: {exc}", file=sys.stderr)
        return VERIFY_ERROR
    except (CatalogError, SoundnessError) as exc:
        print(str(exc), file=sys.stderr)
        return VERIFY_ERROR
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return VERIFY_ERROR


if __name__ == "__main__":
    sys.exit(main())
