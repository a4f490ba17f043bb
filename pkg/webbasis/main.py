"""Command-line entry point."""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from webbasis.config import settings
from webbasis.models.word import GlWeight, TypeString, Word
from webbasis.services.basis import (assemble, endomorphism_basis, export_csv, export_json, hecke_block,
                                     highest_weight_subset, invariant_basis, verify_triangular)
from webbasis.services.errors import ScaleGuardError, VerificationError, WebBasisError
from webbasis.services.evaluation import coefficients
from webbasis.services.exterior import verify_hopf_relations
from webbasis.services.growth import boundary_weights, grow, parse_text, render_text
from webbasis.services.member import is_basis_diagram
from webbasis.services.render import render_svg
from webbasis.services.selftest import equivariance_suite, run_all
from webbasis.services.wave import (bind_book, closed_wave_matrix, closed_wave_of, closed_wave_to_tableau,
                                    closed_wave_to_word, enumerate_closed, pages_of)
from webbasis.services.words import parse_type, parse_weight, parse_word
from webbasis.utils.helpers import format_int_list, to_json, write_output

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_VERIFY = 3

VERBS = ("grow", "eval", "basis", "verify", "invariants", "hw", "wave", "member",
         "render", "selftest", "endo", "hecke")


def configure_logging() -> None:
    level = logging.DEBUG if settings.DEBUG else getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.APP_NAME, description="Web bases of mixed tensor powers for quantum gl(n)")
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("--n", type=int, help="rank of gl(n)")
    parser.add_argument("--r", type=int, help="word length")
    parser.add_argument("--k", type=int, help="number of blocks for wave enumeration")
    parser.add_argument("--word", help="word literal, e.g. 12'1 or [1,-2,1]")
    parser.add_argument("--type", dest="type_string", help="type string of + and -")
    parser.add_argument("--weight", help="gl(n) weight, e.g. 3,3")
    parser.add_argument("--diagram", help="diagram text file")
    parser.add_argument("--out", help="output file (stdout when absent)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--max-words", type=int, help="scale guard ceiling for this invocation")
    parser.add_argument("--render", help="also write an SVG of the diagram to this file")
    parser.add_argument("--verify", action="store_true", help="check triangularity of the assembled matrix")
    parser.add_argument("--enumerate", action="store_true", help="enumerate closed wave graphs of size n x k")
    parser.add_argument("--full", action="store_true", help="run the selftest over the full ranges")
    return parser


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(f"{args.verb} needs --{', --'.join(m.replace('type_string', 'type') for m in missing)}")
    if args.n is not None and args.n < 1:
        raise ValueError(f"--n must be at least 1, got {args.n}")
    if args.r is not None and args.r < 0:
        raise ValueError(f"--r must be non-negative, got {args.r}")


def _word(args: argparse.Namespace) -> Word:
    return parse_word(args.word, args.n)


def _type(args: argparse.Namespace) -> Optional[TypeString]:
    return parse_type(args.type_string) if args.type_string is not None else None


def _weight(args: argparse.Namespace) -> Optional[GlWeight]:
    return parse_weight(args.weight, args.n) if args.weight is not None else None


def _word_list(words: List[Word], fmt: str) -> str:
    if fmt == "json":
        return to_json([str(w) for w in words])
    return "\n".join(str(w) for w in words)


def _read_diagram(path: str):
    return parse_text(Path(path).read_text(encoding="utf-8"))


def cmd_grow(args: argparse.Namespace) -> int:
    _require(args, "n", "word")
    d = grow(_word(args), args.n)
    if args.format == "json":
        H, D = boundary_weights(d)
        text = to_json({"word": str(d.word), "n": d.n, "oa": d.oa_edges, "ob": d.ob_edges,
                        "top": d.top, "H": list(H.coords), "D": list(D.coords)})
    else:
        text = render_text(d)
    write_output(text, args.out)
    if args.render:
        write_output(render_svg(d), args.render)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    _require(args, "n", "word")
    w = _word(args)
    pairs = coefficients(w, args.n)
    if args.format == "text":
        text = "\n".join(f"{x}\t{value}" for x, value in pairs)
    elif args.format == "json":
        text = to_json([{"x": str(x), "poly": str(value)} for x, value in pairs])
    else:
        text = "x,poly\n" + "\n".join(f"{x},{value}" for x, value in pairs)
    write_output(text, args.out)
    return EXIT_OK


def _emit_matrix(m, args: argparse.Namespace) -> None:
    if args.format == "json":
        text = export_json(m)
    elif args.format == "csv":
        text = export_csv(m)
    else:
        text = "\n".join(f"{r.row_word} {r.col_word} {r.poly}" for r in m.records())
    write_output(text, args.out)


def _report_exit(reports) -> int:
    for report in reports:
        for line in report.lines():
            print(line)
        print(report.summary())
    if all(report.passed for report in reports):
        return EXIT_OK
    raise VerificationError("; ".join(report.suite for report in reports if not report.passed))


def cmd_basis(args: argparse.Namespace) -> int:
    _require(args, "n", "r")
    m = assemble(args.r, args.n, _type(args), _weight(args), args.max_words)
    if args.verify:
        return _report_exit([verify_triangular(m)])
    _emit_matrix(m, args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    _require(args, "n")
    reports = [verify_hopf_relations(args.n)]
    if args.n <= 3:
        reports.append(equivariance_suite(args.n))
    return _report_exit(reports)


def cmd_invariants(args: argparse.Namespace) -> int:
    _require(args, "n", "type_string")
    write_output(_word_list(invariant_basis(_type(args), args.n, args.max_words), args.format), args.out)
    return EXIT_OK


def cmd_hw(args: argparse.Namespace) -> int:
    _require(args, "n", "type_string", "weight")
    words = highest_weight_subset(_type(args), _weight(args), args.n, args.max_words)
    write_output(_word_list(words, args.format), args.out)
    return EXIT_OK


def cmd_endo(args: argparse.Namespace) -> int:
    _require(args, "n", "type_string")
    write_output(_word_list(endomorphism_basis(_type(args), args.n, args.max_words), args.format), args.out)
    return EXIT_OK


def cmd_hecke(args: argparse.Namespace) -> int:
    _require(args, "n")
    _emit_matrix(hecke_block(args.n, args.max_words), args)
    return EXIT_OK


def cmd_wave(args: argparse.Namespace) -> int:
    _require(args, "n")
    if args.enumerate:
        _require(args, "k")
        graphs = enumerate_closed(args.n, args.k)
        if args.format == "json":
            text = to_json([{"word": str(closed_wave_to_word(g)), "blocks": closed_wave_matrix(g)} for g in graphs])
        else:
            text = "\n".join(f"{closed_wave_to_word(g)} {g}" for g in graphs)
        write_output(text, args.out)
        return EXIT_OK
    _require(args, "word")
    w = _word(args)
    pages = pages_of(w, args.n)
    book = bind_book(pages)
    g = closed_wave_of(w, args.n)
    if args.format == "json":
        text = to_json({
            "word": str(w),
            "pages": [{"index": p.index, "word": list(p.word), "arcs": [list(a) for a in arcs.arcs]}
                      for p, arcs in zip(pages, book.pages)],
            "blocks": closed_wave_matrix(g) if g is not None else None,
            "tableau": closed_wave_to_tableau(g) if g is not None else None,
        })
    else:
        lines = [f"page {p.index}: {''.join(str(a) for a in p.word)} arcs {list(arcs.arcs)}"
                 for p, arcs in zip(pages, book.pages)]
        if g is None:
            lines.append("not closed")
        else:
            lines.append("blocks: " + " ".join(format_int_list(b) for b in closed_wave_matrix(g)))
            lines.append("tableau: " + " ".join(format_int_list(row) for row in closed_wave_to_tableau(g)))
        text = "\n".join(lines)
    write_output(text, args.out)
    return EXIT_OK


def cmd_member(args: argparse.Namespace) -> int:
    _require(args, "diagram")
    report = is_basis_diagram(_read_diagram(args.diagram))
    if args.format == "json":
        write_output(to_json({"is_basis": report.is_basis, "word": str(report.extracted_word),
                              "mismatch_cell": report.mismatch_cell}), args.out)
    else:
        write_output(report.summary(), args.out)
    return EXIT_OK if report.is_basis else EXIT_USAGE


def cmd_render(args: argparse.Namespace) -> int:
    if args.diagram is not None:
        d = _read_diagram(args.diagram)
    else:
        _require(args, "n", "word")
        d = grow(_word(args), args.n)
    write_output(render_svg(d), args.out or args.render)
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    return _report_exit(run_all(quick=not args.full))


COMMANDS = {
    "grow": cmd_grow,
    "eval": cmd_eval,
    "basis": cmd_basis,
    "verify": cmd_verify,
    "invariants": cmd_invariants,
    "hw": cmd_hw,
    "wave": cmd_wave,
    "member": cmd_member,
    "render": cmd_render,
    "selftest": cmd_selftest,
    "endo": cmd_endo,
    "hecke": cmd_hecke,
}


def run(args: argparse.Namespace) -> int:
    """Dispatch one parsed command and map failures to exit codes."""
    try:
        return COMMANDS[args.verb](args)
    except ScaleGuardError as e:
        logger.error(f"Error in {args.verb}: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except VerificationError as e:
        logger.error(f"Verification failed in {args.verb}: {str(e)}")
        return EXIT_VERIFY
    except (WebBasisError, ValueError, OSError) as e:
        logger.error(f"Error in {args.verb}: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
