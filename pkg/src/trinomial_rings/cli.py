"""Command line interface: ``analyze``, ``cox`` and ``enumerate``.

Exit codes: 0 success, 1 parse/IO error, 2 invalid triple, 3 inadmissible
downgrade data, 4 enumeration bounds refused.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import coxring
from .lattice import DimensionError, IntMatrix
from .trinomial import (
    ConsistencyError,
    TripleData,
    block_gcds,
    complexity_check,
    factoriality,
    is_sincere,
    pointedness_witness,
    presentation,
    standard_configuration,
    validate,
)

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_INADMISSIBLE, EXIT_BOUNDS = 0, 1, 2, 3, 4
MAX_CANDIDATES = 10**6

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class DocumentError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def parse_rational(value, path: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(path, f"expected an integer or 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if match:
            den = int(match.group(2) or 1)
            if den == 0:
                raise DocumentError(path, "zero denominator")
            return Fraction(int(match.group(1)), den)
    raise DocumentError(path, f"expected an integer or 'p/q' string, got {value!r}")


def _parse_int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(path, f"expected an integer, got {value!r}")
    return value


def _parse_list(value, path: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(path, f"expected an array, got {type(value).__name__}")
    return value


def parse_triple(doc) -> TripleData:
    """Turn a decoded JSON document ``{"A": ..., "n": ..., "L": ...}`` into a triple.

    Only the shape of the document is checked here; mathematical hypotheses
    are left to :func:`validate`.
    """
    if not isinstance(doc, dict):
        raise DocumentError("$", "expected an object with keys A, n, L")
    for key in ("A", "n", "L"):
        if key not in doc:
            raise DocumentError("$", f"missing key {key!r}")
    A = []
    for i, pair in enumerate(_parse_list(doc["A"], "$.A")):
        pair = _parse_list(pair, f"$.A[{i}]")
        if len(pair) != 2:
            raise DocumentError(f"$.A[{i}]", "expected a pair [b, c]")
        A.append(tuple(parse_rational(x, f"$.A[{i}][{k}]") for k, x in enumerate(pair)))
    n = [_parse_int(x, f"$.n[{i}]") for i, x in enumerate(_parse_list(doc["n"], "$.n"))]
    L = []
    for i, row in enumerate(_parse_list(doc["L"], "$.L")):
        row = _parse_list(row, f"$.L[{i}]")
        L.append(tuple(_parse_int(x, f"$.L[{i}][{j}]") for j, x in enumerate(row)))
    return TripleData(tuple(A), tuple(n), tuple(L))


def triple_document(t: TripleData) -> dict:
    return {"A": [[_rational_json(b), _rational_json(c)] for b, c in t.A],
            "n": list(t.n), "L": [list(row) for row in t.L]}


def _rational_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _order_json(k):
    return "inf" if k == math.inf else k


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def analysis_report(t: TripleData) -> dict:
    problems = validate(t)
    report = {"valid": not problems, "violations": problems, "triple": triple_document(t)}
    if problems:
        return report
    pres = presentation(t)
    names = pres.variable_names()
    sincere = is_sincere(t)
    report.update({
        "r": t.r,
        "n_total": t.n_total,
        "sincere": sincere,
        "P": pres.P.tolist(),
        "K": {"rank": pres.K.rank, "torsion": list(pres.K.torsion)},
        "degrees": [{"variable": name, **deg.coordinates()}
                    for name, deg in zip(names, pres.degrees)],
        "relations": [g.render(names) for g in pres.relations],
        "block_gcds": list(block_gcds(t)),
        "factorial": factoriality(t, pres).factorial if sincere else "n/a: not sincere",
        "pointed_witness": list(pointedness_witness(t)),
        "complexity_one": complexity_check(pres),
    })
    return report


def _group_text(rank: int, torsion: Sequence[int]) -> str:
    parts = ["Z"] * rank + [f"Z/{d}" for d in torsion]
    return " ⊕ ".join(parts) if parts else "0"


def _degree_text(deg: dict) -> str:
    return "(" + ", ".join([str(a) for a in deg["free"]] + [f"{t}̄" for t in deg["torsion"]]) + ")"


def render_analysis_text(report: dict) -> str:
    if not report["valid"]:
        return "invalid triple:\n" + "\n".join(f"  - {v}" for v in report["violations"])
    lines = [
        f"r = {report['r']}, n = {report['n_total']}, sincere: {report['sincere']}",
        "P =",
        *("  " + " ".join(f"{x:>3}" for x in row) for row in report["P"]),
        f"K = {_group_text(report['K']['rank'], report['K']['torsion'])}",
        "degrees:",
        *(f"  deg({d['variable']}) = {_degree_text(d)}" for d in report["degrees"]),
        "relations:",
        *(f"  {g}" for g in report["relations"] or ["(none)"]),
        f"factorial: {report['factorial']}",
        f"pointed witness: {report['pointed_witness']}",
        f"complexity one: {report['complexity_one']}",
    ]
    return "\n".join(lines)


def cox_report(cox: coxring.CoxPresentation) -> dict:
    names = cox.column_names()
    witness = coxring.positive_kernel_vector(cox.dotP)
    return {
        "dotP": cox.dotP.tolist(),
        "s": cox.data.s,
        "m": cox.data.m,
        "admissibility": cox.admissibility.as_dict(),
        "Kdot": {"rank": cox.Kdot.rank, "torsion": list(cox.Kdot.torsion)},
        "degrees": [{"variable": name, **deg.coordinates()}
                    for name, deg in zip(names, cox.degrees)],
        "isotropy_orders": [_order_json(coxring.isotropy_order(cox, c)) for c in range(len(names))],
        "degrees_pairwise_distinct": coxring.degrees_pairwise_distinct(cox),
        "nonassociation": coxring.nonassociation_certificate(cox),
        "positive_kernel_vector": None if witness is None else [_rational_json(x) for x in witness],
    }


def render_cox_text(report: dict) -> str:
    adm = report["admissibility"]
    lines = [
        "dotP =",
        *("  " + " ".join(f"{x:>3}" for x in row) for row in report["dotP"]),
        f"admissible: {adm['admissible']} (s bound {adm['s_in_bounds']}, primitive {adm['primitive']},"
        f" distinct {adm['distinct']}, full cone {adm['full_cone']})",
    ]
    lines += [f"  {msg}" for msg in adm["messages"]]
    if "Kdot" in report:
        lines.append(f"Kdot = {_group_text(report['Kdot']['rank'], report['Kdot']['torsion'])}")
        lines.append("degrees / isotropy:")
        for d, iso in zip(report["degrees"], report["isotropy_orders"]):
            lines.append(f"  deg({d['variable']}) = {_degree_text(d)}   isotropy {iso}")
        lines.append(f"degrees pairwise distinct: {report['degrees_pairwise_distinct']}")
    return "\n".join(lines)


def _emit(obj: dict, fmt: str, text_renderer, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")
    else:
        stream.write(text_renderer(obj) + "\n")


def _read_triple(path: str) -> TripleData:
    return parse_triple(_load_json(path))


def cmd_analyze(args) -> int:
    try:
        t = _read_triple(args.path)
    except (OSError, json.JSONDecodeError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    report = analysis_report(t)
    _emit(report, args.format, render_analysis_text)
    if not report["valid"]:
        print("error: " + "; ".join(report["violations"]), file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def _read_matrix(path: str, label: str, cols: Optional[int] = None) -> IntMatrix:
    doc = _load_json(path)
    rows = _parse_list(doc, f"{label}$")
    parsed = [[_parse_int(x, f"{label}$[{i}][{j}]") for j, x in enumerate(_parse_list(row, f"{label}$[{i}]"))]
              for i, row in enumerate(rows)]
    try:
        return IntMatrix.from_rows(parsed, cols=cols)
    except DimensionError as exc:
        raise DocumentError(f"{label}$", str(exc)) from None


def cmd_cox(args) -> int:
    try:
        t = _read_triple(args.path)
    except (OSError, json.JSONDecodeError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    problems = validate(t)
    if problems:
        print("error: " + "; ".join(problems), file=sys.stderr)
        return EXIT_INVALID
    base = presentation(t)
    if args.auto_surface:
        data = coxring.surface_recipe(base)
    else:
        try:
            d = _read_matrix(args.d, "d", cols=base.n_total)
            if args.dprime:
                dp = _read_matrix(args.dprime, "dprime")
                if dp.rows == 0:
                    dp = IntMatrix.zeros(d.rows, 0)
            else:
                dp = IntMatrix.zeros(d.rows, 0)
            if dp.rows != d.rows:
                raise DocumentError("dprime$", f"expected {d.rows} rows, got {dp.rows}")
        except (OSError, json.JSONDecodeError, DocumentError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        data = coxring.DowngradeData(d.rows, dp.cols, d, dp)
    try:
        cox = coxring.build(base, data)
    except coxring.InadmissibleError as exc:
        dotP = coxring.block_matrix(base.P, data.d, data.d_prime)
        _emit({"dotP": dotP.tolist(), "s": data.s, "m": data.m,
               "admissibility": exc.report.as_dict()}, args.format, render_cox_text)
        print(f"error: inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    _emit(cox_report(cox), args.format, render_cox_text)
    return EXIT_OK


def _block_shapes(max_n: int, max_l: int) -> list[tuple[int, ...]]:
    """Exponent blocks up to permutation: non-decreasing tuples."""
    blocks = []
    for k in range(1, max_n + 1):
        blocks.extend(itertools.combinations_with_replacement(range(1, max_l + 1), k))
    return blocks


def candidate_count(r: int, max_n: int, max_l: int) -> int:
    nblocks = sum(math.comb(max_l + k - 1, k) for k in range(1, max_n + 1))
    return math.comb(nblocks + r, r + 1)


def canonical_triples(r: int, max_n: int, max_l: int):
    """One representative per triple up to reordering blocks and variables within blocks."""
    A = standard_configuration(r)
    for L in itertools.combinations_with_replacement(_block_shapes(max_n, max_l), r + 1):
        yield TripleData(A, tuple(len(b) for b in L), tuple(L))


def cmd_enumerate(args) -> int:
    if args.r < 1 or args.max_n < 1 or args.max_l < 1:
        print("error: bounds must be positive", file=sys.stderr)
        return EXIT_BOUNDS
    count = candidate_count(args.r, args.max_n, args.max_l)
    if count > MAX_CANDIDATES:
        print(f"error: {count} candidates exceed the limit of {MAX_CANDIDATES}", file=sys.stderr)
        return EXIT_BOUNDS
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    summary = {"emitted": 0, "factorial": 0, "non_factorial": 0, "not_sincere": 0}
    try:
        for t in canonical_triples(args.r, args.max_n, args.max_l):
            if args.sincere_only and not is_sincere(t):
                continue
            try:
                report = analysis_report(t)
            except ConsistencyError as exc:
                print(f"error: gcd and torsion criteria disagree on {triple_document(t)}: {exc}",
                      file=sys.stderr)
                return EXIT_IO
            out.write(json.dumps(report, ensure_ascii=False) + "\n")
            summary["emitted"] += 1
            verdict = report["factorial"]
            if verdict is True:
                summary["factorial"] += 1
            elif verdict is False:
                summary["non_factorial"] += 1
            else:
                summary["not_sincere"] += 1
        out.write(json.dumps({"summary": summary}) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trinomial-rings",
                                     description="Graded trinomial algebras and their Cox ring data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="grading group, degrees and factoriality of a triple")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cox", help="downgraded presentation from [[P, 0], [d, d']]")
    p.add_argument("path")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--d", help="JSON file with the s x n matrix d")
    src.add_argument("--auto-surface", action="store_true",
                     help="use s = 1, m = 2 and the surface choice of d")
    p.add_argument("--dprime", help="JSON file with the s x m matrix d'")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_cox)

    p = sub.add_parser("enumerate", help="sweep canonical triples with the standard A")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-l", type=int, required=True)
    p.add_argument("--sincere-only", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "dprime", None) and getattr(args, "auto_surface", False):
        print("error: --dprime cannot be combined with --auto-surface", file=sys.stderr)
        return EXIT_IO
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
