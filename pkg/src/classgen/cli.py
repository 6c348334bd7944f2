"""Command line interface.

Subcommands:
  gens     print the generator pair (json, text or gap format)
  certify  run the closure certification and set the exit code
  order    print the theoretical group order

Exit codes: 0 success / PASS, 1 FAIL, 2 unsupported parameters,
3 usage error, 4 INDETERMINATE (cap truncated the closure).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from classgen.closure import DEFAULT_CAP, Verdict, certify, theoretical_order
from classgen.families import (
    GroupSpec,
    UnsupportedParametersError,
    generator_pair,
    parse_family,
)
from classgen.forms import FormKind, gram
from classgen.gf import field_to_json, poly_string
from classgen.matrix import Mat

CAP_ENV = "CLASSGEN_CAP"

_FORM_KIND = {"sp": FormKind.SYMPLECTIC, "gu": FormKind.UNITARY, "su": FormKind.UNITARY}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this tool reserves 2, so use 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _rows_payload(m: Mat) -> list:
    return [[list(e.coeffs) for e in row] for row in m.rows()]


def _is_leaf_list(node) -> bool:
    """A coefficient vector or a single matrix row: keep these on one line."""
    if not isinstance(node, list) or not node:
        return False
    if all(isinstance(x, int) for x in node):
        return True
    return all(
        isinstance(x, list) and x and all(isinstance(y, int) for y in x)
        for x in node
    )


def _dumps(payload) -> str:
    """json.dumps(indent=2), but coefficient vectors and matrix rows stay
    on single lines so the output is readable for humans as well as parsers."""
    compact: dict[str, str] = {}

    def mark(node):
        if _is_leaf_list(node):
            token = f"@@compact:{len(compact)}@@"
            compact[token] = json.dumps(node, separators=(", ", ": "))
            return token
        if isinstance(node, list):
            return [mark(x) for x in node]
        if isinstance(node, dict):
            return {key: mark(value) for key, value in node.items()}
        return node

    text = json.dumps(mark(payload), indent=2)
    for token, body in compact.items():
        text = text.replace(json.dumps(token), body)
    return text


def _form_for(spec: GroupSpec, ctx) -> tuple[FormKind, Mat] | None:
    kind = _FORM_KIND.get(spec.family.value)
    if kind is None:
        return None
    form = gram(ctx, kind, spec.degree)
    return kind, form.j


def _text_rows(m: Mat) -> list[str]:
    return ["  " + line for line in str(m).splitlines()]


def cmd_gens(args) -> int:
    spec = GroupSpec(parse_family(args.family), args.degree, args.q)
    pair = generator_pair(spec)
    ctx = pair.ctx

    if args.format == "json":
        payload = {
            "family": spec.family.value,
            "degree": spec.degree,
            "q": spec.q,
            "case_label": pair.case_label,
            "field": field_to_json(ctx),
            "generators": [
                {"rows": _rows_payload(pair.a)},
                {"rows": _rows_payload(pair.b)},
            ],
        }
        if args.emit_form:
            info = _form_for(spec, ctx)
            payload["form"] = None if info is None else {
                "kind": info[0].value,
                "rows": _rows_payload(info[1]),
            }
        print(_dumps(payload))
        return 0

    if args.format == "text":
        lines = [
            f"family: {spec.family.value}",
            f"degree: {spec.degree}",
            f"q: {spec.q}",
            f"case: {pair.case_label}",
            f"field: GF({ctx.q}), p={ctx.p}, k={ctx.k}, "
            f"modulus={list(ctx.modulus)}, xi={list(ctx.xi.coeffs)}",
            "generator a:",
            *_text_rows(pair.a),
            "generator b:",
            *_text_rows(pair.b),
        ]
        if args.emit_form:
            info = _form_for(spec, ctx)
            if info is None:
                lines.append("form: none")
            else:
                lines.append(f"form: {info[0].value}")
                lines.extend(_text_rows(info[1]))
        print("\n".join(lines))
        return 0

    # gap format: entries as powers of xi, the xi mapping stated up front
    def gap_entry(code: int) -> str:
        return "0*xi^0" if code == 0 else f"xi^{ctx.dlog_code(code)}"

    def gap_matrix(name: str, m: Mat) -> list[str]:
        body = []
        for i, row in enumerate(m.codes):
            sep = "," if i + 1 < m.n else ""
            body.append("  [ " + ", ".join(gap_entry(int(c)) for c in row) + f" ]{sep}")
        return [f"{name} := ["] + body + ["];"]

    lines = [
        f"# family {spec.family.value}, degree {spec.degree}, q {spec.q}, "
        f"case: {pair.case_label}",
        f"# field GF({ctx.q}) = GF({ctx.p})[t] / ({poly_string(ctx.modulus)})",
        f"# xi is the primitive element with coefficients {list(ctx.xi.coeffs)} "
        f"(constant term first)",
        "# entries are powers of xi; zero prints as 0*xi^0",
    ]
    lines += gap_matrix("a", pair.a)
    lines += gap_matrix("b", pair.b)
    if args.emit_form:
        info = _form_for(spec, ctx)
        if info is None:
            lines.append("# form: none")
        else:
            lines.append(f"# form: {info[0].value}")
            lines += gap_matrix("j", info[1])
    print("\n".join(lines))
    return 0


def _resolve_cap(args) -> int:
    if args.cap is not None:
        cap = args.cap
    else:
        raw = os.environ.get(CAP_ENV)
        if raw is None:
            cap = DEFAULT_CAP
        else:
            try:
                cap = int(raw)
            except ValueError:
                raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    return cap


def cmd_certify(args) -> int:
    spec = GroupSpec(parse_family(args.family), args.degree, args.q)
    cap = _resolve_cap(args)
    cert = certify(spec, cap=cap)
    res = cert.closure
    print(f"family:     {spec.family.value}")
    print(f"degree:     {spec.degree}")
    print(f"q:          {spec.q}")
    print(f"membership: {'ok' if cert.membership_ok else 'FAILED'}")
    print(f"expected:   {cert.expected_order}")
    print(f"size:       {res.size}")
    print(f"rounds:     {res.frontier_rounds}")
    print(f"truncated:  {'yes (cap ' + str(cap) + ')' if res.truncated else 'no'}")
    print(f"verdict:    {cert.verdict.value}")
    if cert.verdict is Verdict.PASS:
        return 0
    if cert.verdict is Verdict.INDETERMINATE:
        return 4
    return 1


def cmd_order(args) -> int:
    spec = GroupSpec(parse_family(args.family), args.degree, args.q)
    print(theoretical_order(spec))
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", required=True,
                     help="gl, sl, sp, gu, su or a long name like 'special linear'")
    sub.add_argument("--degree", type=int, required=True, help="matrix degree n")
    sub.add_argument("--q", type=int, required=True, help="defining field size q")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="classgen",
                     description="Two-generator pairs for the classical matrix groups, "
                                 "with brute-force certification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gens = sub.add_parser("gens", help="print the generator pair")
    _add_common(p_gens)
    p_gens.add_argument("--format", choices=("json", "text", "gap"), default="json")
    p_gens.add_argument("--emit-form", action="store_true",
                        help="also print the preserved Gram matrix (sp/gu/su)")
    p_gens.set_defaults(func=cmd_gens)

    p_cert = sub.add_parser("certify", help="closure-certify the pair")
    _add_common(p_cert)
    p_cert.add_argument("--cap", type=int, default=None,
                        help=f"closure size cap (default {CAP_ENV} or {DEFAULT_CAP})")
    p_cert.set_defaults(func=cmd_certify)

    p_order = sub.add_parser("order", help="print the theoretical group order")
    _add_common(p_order)
    p_order.set_defaults(func=cmd_order)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedParametersError as exc:
        print(f"classgen: unsupported parameters: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"classgen: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
