"""Command-line interface for building and auditing self-dual codes.

Subcommands
-----------
construct
    Build one family instance, run every verification oracle, and print
    the full report (text or JSON).  The JSON form embeds the generator
    matrices so that ``inspect`` can re-audit it later with no knowledge
    of how it was produced.
factor
    Factor x**n - 1 or x**n + 1 over GF(q) into its irreducible
    cyclotomic-coset factors.
verify-tables
    Re-verify the bundled result tables end to end and summarise the
    outcome per table.  Exits nonzero when any entry's claimed property
    is refuted (hypotheses hold but an oracle fails).
search
    Scan a parameter box for instances of one family whose hypotheses
    hold, verifying each hit.
inspect
    Re-audit a saved ``construct --format json`` report purely from its
    stored matrices: rank, self-duality under the family's form, the
    generator-polynomial/defining-set round trip, distances, and the
    extension coefficient's defining equation.

Exit status is 0 on success, 1 when a verifiable claim failed or a
construction error occurred, and 2 for command-line usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .codes import (
    DEFAULT_BUDGET,
    LinearCode,
    gram_nonzero_witness,
    matrix_rank,
    min_distance,
)
from .constructions import (
    ROUTE_CAP,
    STATUS_PASS,
    STATUS_UNVERIFIED_DISTANCE,
    GammaSolution,
    VerificationReport,
    build_cyclic_euclidean,
    build_cyclic_hermitian,
    build_nega_allodd,
    build_nega_centered,
    build_nega_extended,
)
from .errors import DuadicError, InvalidTableError
from .fields import FieldSpec, field_from_order
from .poly import factor_xn_minus_a, generator_poly
from .tables import TABLE_IDS, parse_prime_power
from .verify import KIND_BY_FAMILY, search_family, summarize, verify_table

# CLI family names (kebab-case) -> internal family identifiers.
CLI_FAMILIES = {
    "cyclic-euclidean": "cyclic_euclidean",
    "cyclic-hermitian": "cyclic_hermitian",
    "nega-centered": "nega_centered",
    "nega-allodd-euclidean": "nega_allodd_euclidean",
    "nega-allodd-hermitian": "nega_allodd_hermitian",
    "nega-extended": "nega_extended_2pt",
}

# construct parameter contract: family -> (required flags, optional flags).
_FAMILY_FLAGS = {
    "cyclic-euclidean": (("q", "n"), ()),
    "cyclic-hermitian": (("q", "p"), ("m",)),
    "nega-centered": (("q", "n"), ()),
    "nega-allodd-euclidean": (("q", "n"), ()),
    "nega-allodd-hermitian": (("q", "n"), ()),
    "nega-extended": (("q", "p"), ("t",)),
}


def _prime_power(text: str) -> int:
    """argparse type for --q: accepts "49" as well as "7^2"."""
    try:
        base, exp = parse_prime_power(text)
    except InvalidTableError as exc:
        raise argparse.ArgumentTypeError(str(exc).strip("'\"")) from exc
    return base**exp


def _env_threads() -> int | None:
    raw = os.environ.get("DUADIC_THREADS")
    return int(raw) if raw else None


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _poly_text(poly) -> str:
    """Highest-degree-first rendering with coefficients as element indices."""
    terms = []
    for k in range(poly.degree, -1, -1):
        c = poly.coefficient(k)
        if c.is_zero:
            continue
        if k == 0:
            terms.append(str(c.index))
        else:
            xk = "x" if k == 1 else f"x^{k}"
            terms.append(xk if c == poly.field.one else f"{c.index}*{xk}")
    return " + ".join(terms) if terms else "0"


def _check_lines(checks) -> list[str]:
    return [
        f"  [{c.outcome}] {c.name}" + (f": {c.witness}" if c.witness else "")
        for c in checks
    ]


def _render_report(report: VerificationReport, show_matrix: bool) -> str:
    lines = [report.summary_line()]
    if report.recipe is not None:
        lines.append("hypotheses:")
        lines.extend(_check_lines(report.recipe.hypothesis_checks))
    if report.checks:
        lines.append("checks:")
        lines.extend(_check_lines(report.checks))
    if report.gamma is not None:
        g = report.gamma
        lines.append(
            f"extension coefficient: {g.equation} over {g.field} with n = {g.n}: "
            f"gamma is element #{g.gamma.index}"
        )
    if report.codes:
        lines.append("codes:")
        for i, code in enumerate(report.codes):
            d = report.distances[i].to_dict() if i < len(report.distances) else None
            dtext = ""
            if d is not None:
                dtext = (
                    f", d = {d['value']} ({d['method']})"
                    if d["value"] is not None
                    else f", d in [{d['lower']}, {d['upper']}] ({d['method']})"
                )
            sets = ""
            if code.defining_set is not None:
                members = code.defining_set.sorted_members()
                shown = members if len(members) <= 24 else f"{len(members)} positions"
                sets = f", defining set {shown}"
            shift = f", shift {code.shift}" if code.shift is not None else ""
            lines.append(
                f"  code {i + 1}: [{code.n}, {code.k}] over "
                f"{code.field}{shift}{sets}{dtext}"
            )
            if show_matrix:
                for row in code.genmat.tolist():
                    lines.append("    " + " ".join(f"{v:>3}" for v in row))
    if report.timings:
        lines.append(
            "timings: "
            + " ".join(f"{k}={v:.3f}s" for k, v in sorted(report.timings.items()))
        )
    return "\n".join(lines)


def _first_failure(report: VerificationReport) -> str:
    hyp = report.recipe.hypothesis_checks if report.recipe is not None else []
    for c in list(hyp) + list(report.checks):
        if c.outcome == "fail":
            return f"{c.name}: {c.witness}" if c.witness else c.name
    return ""


def _entry_label(entry: dict) -> str:
    base, exp = entry.get("q_base"), entry.get("q_exp", 1)
    if base is None:
        return str(entry.get("q", "?"))
    return str(base) if exp == 1 else f"{base}^{exp}"


def _table_line(report: VerificationReport) -> str:
    e = report.entry
    line = (
        f"table {e.get('table_id', '?')}  n={e.get('n', '?'):<4} "
        f"q={_entry_label(e):<6} {e.get('family', '?'):<24} {report.status}"
    )
    note = _first_failure(report)
    if note and report.status not in (STATUS_PASS, STATUS_UNVERIFIED_DISTANCE):
        line += f"  ({note})"
    return line


def _counts_line(label: str, counts: dict) -> str:
    parts = [f"{k}={v}" for k, v in counts.items() if k != "total" and v]
    return f"{label}: total={counts['total']} " + " ".join(parts)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text + "\n")
        print(f"wrote {output}")
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_construct(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    required, optional = _FAMILY_FLAGS[args.family]
    for flag in ("q", "n", "p", "m", "t"):
        value = getattr(args, flag)
        if flag in required and value is None:
            parser.error(f"--{flag} is required for --family {args.family}")
        if flag not in required and flag not in optional and value is not None:
            parser.error(f"--{flag} does not apply to --family {args.family}")

    family = CLI_FAMILIES[args.family]
    kw = {"budget": args.budget, "force": args.force}
    if family == "cyclic_euclidean":
        _, report = build_cyclic_euclidean(args.q, args.n, **kw)
    elif family == "cyclic_hermitian":
        _, report = build_cyclic_hermitian(args.q, args.p, args.m or 1, **kw)
    elif family == "nega_centered":
        _, report = build_nega_centered(args.q, args.n, **kw)
    elif family == "nega_allodd_euclidean":
        _, report = build_nega_allodd(args.q, args.n, "euclidean", **kw)
    elif family == "nega_allodd_hermitian":
        _, report = build_nega_allodd(args.q, args.n, "hermitian", **kw)
    else:
        _, report = build_nega_extended(args.q, args.p, args.t or 1, **kw)

    if args.format == "json":
        text = json.dumps(report.to_dict(codes="full"), indent=2, sort_keys=True)
    else:
        text = _render_report(report, show_matrix=args.show_matrix)
    _emit(text, args.output)
    return 0 if report.status in (STATUS_PASS, STATUS_UNVERIFIED_DISTANCE) else 1


def _cmd_factor(args: argparse.Namespace) -> int:
    field = field_from_order(args.q)
    factors = factor_xn_minus_a(field, args.n, args.shift)
    if args.format == "json":
        payload = {
            "q": field.q,
            "n": args.n,
            "shift": args.shift,
            "factors": [
                {
                    "coset": sorted(coset),
                    "coefficient_indices": list(poly.indices()),
                }
                for coset, poly in factors
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    sign = "-" if args.shift == 1 else "+"
    print(
        f"x^{args.n} {sign} 1 over {field} splits into "
        f"{len(factors)} irreducible factors:"
    )
    if field.m > 1:
        print("(coefficients shown as element indices)")
    for coset, poly in factors:
        members = ", ".join(str(r) for r in sorted(coset))
        print(f"  coset {{{members}}}: {_poly_text(poly)}")
    return 0


def _cmd_verify_tables(args: argparse.Namespace) -> int:
    table_ids = args.table or list(TABLE_IDS)
    property_fail = False
    grand: dict[str, int] | None = None
    for tid in table_ids:
        reports = verify_table(tid, budget=args.budget, threads=args.threads)
        counts = summarize(reports)
        property_fail = property_fail or counts["PROPERTY_FAIL"] > 0
        if args.format == "json":
            for rep in reports:
                print(json.dumps(rep.to_dict(codes="summary"), sort_keys=True))
        else:
            for rep in reports:
                print(_table_line(rep))
            print(_counts_line(f"table {tid}", counts))
        grand = counts if grand is None else {k: grand[k] + counts[k] for k in counts}
    if args.format == "text" and grand is not None and len(table_ids) > 1:
        print(_counts_line("overall", grand))
    return 1 if property_fail else 0


def _cmd_search(args: argparse.Namespace) -> int:
    family = CLI_FAMILIES[args.family]
    reports = search_family(
        family,
        args.max_q,
        args.max_n,
        budget=args.budget,
        include_hypothesis_failures=args.include_hypothesis_failures,
    )
    if args.format == "json":
        for rep in reports:
            print(json.dumps(rep.to_dict(codes="summary"), sort_keys=True))
    else:
        for rep in reports:
            print(rep.summary_line())
        print(_counts_line("search", summarize(reports)))
    return 0


def _inspect_code(
    index: int,
    code_data: dict,
    stored_distance: dict | None,
    status: str,
    kind: str,
    budget: int,
    problems: list[str],
    notes: list[str],
) -> None:
    code = LinearCode.from_dict(code_data)
    label = f"code {index + 1} [{code.n}, {code.k}] over {code.field}"

    if code.n <= ROUTE_CAP:
        rank = matrix_rank(code.genmat, code.field)
        if rank != code.k:
            problems.append(f"{label}: matrix rank {rank} != stored k = {code.k}")
        else:
            notes.append(f"{label}: rank {code.k} confirmed")
    else:
        notes.append(f"{label}: rank re-check skipped (n > {ROUTE_CAP})")

    witness = gram_nonzero_witness(code, kind)
    self_dual = witness is None and 2 * code.k == code.n
    if status == STATUS_PASS and not self_dual:
        detail = (
            f"rows {witness[0]}, {witness[1]} have inner product element #{witness[2]}"
            if witness is not None
            else f"n = {code.n} != 2k = {2 * code.k}"
        )
        problems.append(
            f"{label}: stored status PASS but {kind} self-duality fails ({detail})"
        )
    else:
        notes.append(f"{label}: {kind} self-dual = {self_dual}")

    if code.defining_set is not None and code.gen_poly is not None:
        if generator_poly(code.defining_set, code.field) != code.gen_poly:
            problems.append(
                f"{label}: stored generator polynomial does not match "
                "its stored defining set"
            )
        else:
            notes.append(f"{label}: generator polynomial matches defining set")

    if stored_distance is None:
        return
    fresh = min_distance(code, budget)
    claimed = stored_distance.get("value")
    if claimed is not None:
        if fresh.is_exact and fresh.value != claimed:
            problems.append(
                f"{label}: recomputed d = {fresh.value} != stored d = {claimed}"
            )
        elif fresh.is_exact:
            notes.append(f"{label}: d = {claimed} confirmed ({fresh.method})")
        elif not (fresh.lower or 1) <= claimed <= fresh.upper:
            problems.append(
                f"{label}: stored d = {claimed} outside recomputed bounds "
                f"[{fresh.lower}, {fresh.upper}]"
            )
        else:
            notes.append(
                f"{label}: stored d = {claimed} within recomputed bounds "
                f"[{fresh.lower}, {fresh.upper}] (budget {budget})"
            )
    else:
        notes.append(f"{label}: stored distance is bounds-only; nothing to refute")


def _cmd_inspect(args: argparse.Namespace) -> int:
    data = json.loads(Path(args.report).read_text())
    codes_data = data.get("codes") or []
    if not codes_data or "genmat" not in codes_data[0]:
        print(
            "error: report carries no generator matrices; save it with "
            "`construct --format json`",
            file=sys.stderr,
        )
        return 1

    family = (data.get("recipe") or {}).get("family") or data.get("entry", {}).get(
        "family", ""
    )
    kind = KIND_BY_FAMILY.get(family, "euclidean")
    status = data.get("status", "")
    distances = data.get("distances") or []
    problems: list[str] = []
    notes: list[str] = []

    for i, code_data in enumerate(codes_data):
        stored = distances[i] if i < len(distances) else None
        _inspect_code(i, code_data, stored, status, kind, args.budget, problems, notes)

    gamma = data.get("gamma")
    if gamma is not None:
        field = FieldSpec.from_dict(gamma["field"])
        try:
            GammaSolution(
                gamma["equation"],
                field,
                gamma["n"],
                field.from_index(gamma["gamma_index"]),
            )
        except ValueError as exc:
            problems.append(f"stored extension coefficient fails its equation: {exc}")
        else:
            notes.append(
                f"extension coefficient re-satisfies {gamma['equation']} over {field}"
            )

    ok = not problems
    if args.format == "json":
        print(
            json.dumps(
                {"report": args.report, "ok": ok, "problems": problems, "notes": notes},
                indent=2,
                sort_keys=True,
            )
        )
    else:
        for note in notes:
            print(f"  [ok] {note}")
        for problem in problems:
            print(f"  [MISMATCH] {problem}")
        print(("all stored claims re-verified" if ok else "stored claims refuted"))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default text)",
    )


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="max codewords to enumerate for exact distances "
        f"(default {DEFAULT_BUDGET})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="duadic",
        description="Build and audit self-dual codes from duadic "
        "cyclic and negacyclic codes over finite fields.",
    )
    parser.add_argument(
        "--version", action="version", version=f"duadic {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser(
        "construct",
        help="build one family instance and verify every claimed property",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "examples:\n"
            "  duadic construct --family cyclic-euclidean --q 7 --n 3\n"
            "  duadic construct --family cyclic-hermitian --q 3 --p 5\n"
            "  duadic construct --family nega-centered --q 5 --n 6\n"
            "  duadic construct --family nega-extended --q 7 --p 3 "
            "--format json --output run.json"
        ),
    )
    c.add_argument(
        "--family", choices=sorted(CLI_FAMILIES), required=True, help="code family"
    )
    c.add_argument(
        "--q",
        type=_prime_power,
        help='field order, e.g. "49" or "7^2" (base field for hermitian families)',
    )
    c.add_argument("--n", type=int, help="code length before extension")
    c.add_argument("--p", type=int, help="prime giving the length (hermitian: p^m)")
    c.add_argument("--m", type=int, help="length exponent (cyclic-hermitian, default 1)")
    c.add_argument("--t", type=int, help="length exponent (nega-extended, default 1)")
    c.add_argument(
        "--force",
        action="store_true",
        help="build even when hypothesis checks fail (oracles still run)",
    )
    c.add_argument(
        "--show-matrix", action="store_true", help="print generator matrices (text)"
    )
    c.add_argument("--output", help="write the report to this file instead of stdout")
    _add_budget(c)
    _add_format(c)
    c.set_defaults(func=lambda a: _cmd_construct(a, c))

    f = sub.add_parser(
        "factor", help="factor x^n - 1 or x^n + 1 over GF(q) into coset factors"
    )
    f.add_argument("--q", type=_prime_power, required=True, help="field order")
    f.add_argument("--n", type=int, required=True, help="exponent n")
    f.add_argument(
        "--shift",
        type=int,
        choices=(1, -1),
        default=1,
        help="factor x^n - 1 (shift 1, default) or x^n + 1 (shift -1)",
    )
    _add_format(f)
    f.set_defaults(func=_cmd_factor)

    v = sub.add_parser(
        "verify-tables",
        help="re-verify the bundled result tables; exit 1 on any refuted claim",
    )
    v.add_argument(
        "--table",
        type=int,
        choices=TABLE_IDS,
        action="append",
        help="table to verify (repeatable; default: all)",
    )
    v.add_argument(
        "--threads",
        type=int,
        default=_env_threads(),
        help="worker threads (default: DUADIC_THREADS or CPU count, capped at 8)",
    )
    _add_budget(v)
    _add_format(v)
    v.set_defaults(func=_cmd_verify_tables)

    s = sub.add_parser(
        "search", help="scan a parameter box for instances whose hypotheses hold"
    )
    s.add_argument(
        "--family", choices=sorted(CLI_FAMILIES), required=True, help="code family"
    )
    s.add_argument("--max-q", type=int, required=True, help="largest field order")
    s.add_argument("--max-n", type=int, required=True, help="largest code length")
    s.add_argument(
        "--include-hypothesis-failures",
        action="store_true",
        help="also report parameter points whose hypotheses fail",
    )
    _add_budget(s)
    _add_format(s)
    s.set_defaults(func=_cmd_search)

    i = sub.add_parser(
        "inspect",
        help="re-audit a saved construct report from its stored matrices alone",
    )
    i.add_argument("report", help="path to a `construct --format json` report")
    _add_budget(i)
    _add_format(i)
    i.set_defaults(func=_cmd_inspect)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DuadicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
