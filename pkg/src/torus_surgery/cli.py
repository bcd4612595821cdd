"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 input-invariant
violation, 3 consistency violation, 4 unrealizable Kodaira profile.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import catalog
from .abelian import FgAbGroup
from .boundary import lambda_invariant, longitudinal_class
from .errors import (
    InputInvariantError,
    InstanceFormatError,
    NotApplicableError,
    RequiresMinimalModelError,
    TorusSurgeryError,
    UnrealizableProfileError,
)
from .instance import Instance, SurgeryRequest, dumps, encode_int, entry_to_document, parse_instance
from .kodaira import (
    HomologyFingerprint,
    KodairaProfile,
    almost_toric_lookup,
    check_surgery_consistency,
    classify_kappa,
    cy_table_lookup,
    fingerprint_after,
    fingerprint_before,
)
from .surgery import (
    EVEN,
    ODD,
    LClass,
    SurgerySpec,
    betti_profile_after,
    intersection_parity_after,
    is_rational_preferred,
    is_topological_preferred,
    meridian_after,
    surgered_h1,
)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VIOLATION, EXIT_UNREALIZABLE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _group_json(G: FgAbGroup) -> dict[str, Any]:
    return {"free_rank": G.free_rank, "torsion": [encode_int(d) for d in G.torsion], "notation": str(G)}


def _yes_no(flag: Optional[bool]) -> str:
    return "n/a" if flag is None else ("YES" if flag else "NO")


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--gamma expects A,B, got {text!r}") from None
    return a, b


def _ambient_parity(inst: Instance) -> Optional[str]:
    amb = inst.complement.ambient
    if amb is None or amb.intersection_form_odd is None:
        return None
    return ODD if amb.intersection_form_odd else EVEN


# ---------------------------------------------------------------------------
# compute


def _run_surgery(inst: Instance, index: int, req: SurgeryRequest) -> dict[str, Any]:
    C = inst.complement
    F = inst.framing(req.framing)
    S = req.spec
    H = surgered_h1(C, F, S)
    item: dict[str, Any] = {
        "index": index,
        "framing": req.framing,
        "p": encode_int(S.p), "k": encode_int(S.k), "gamma": [encode_int(x) for x in S.gamma],
        "new_meridian": [encode_int(x) for x in meridian_after(F, S)],
        "h1": _group_json(H),
        "notes": [],
    }
    if S.is_trivial:
        item["notes"].append("trivial surgery")
    if not S.is_luttinger_type:
        item["notes"].append(f"p={S.p}: generalized logarithmic transform, outside kappa-invariance guarantees")

    amb = C.ambient
    if amb is None:
        return item
    prof = betti_profile_after(C, F, S)
    item["betti"] = {"b1_delta": prof.b1_delta, "b2_delta": prof.b2_delta, "euler": prof.euler,
                     "signature": prof.signature, "b_plus_after": prof.b_plus_after,
                     "b1_after": prof.b1_after, "b2_after": prof.b2_after}
    parity = None
    if amb.L_class_status is not LClass.RATIONALLY_NONZERO:
        parity = intersection_parity_after(C, F, S)
    item["parity"] = parity

    before = (amb.kappa, fingerprint_before(C), _ambient_parity(inst))
    reports = {"computed": check_surgery_consistency(before, (fingerprint_after(prof), parity), S.p)}
    if req.claimed_after is not None:
        reports["claimed"] = check_surgery_consistency(before, req.claimed_after, S.p)
    item["consistency"] = {name: {"verdict": r.verdict, "violations": r.violations, "warnings": r.warnings}
                           for name, r in reports.items()}
    return item


def _compute_text(items: list[dict[str, Any]]) -> str:
    lines = []
    for it in items:
        g = ",".join(str(x) for x in it["gamma"])
        lines.append(f"surgery {it['index']}: framing={it['framing']} p={it['p']} k={it['k']} gamma=({g})")
        lines.append(f"  H1 = {it['h1']['notation']}")
        for note in it["notes"]:
            lines.append(f"  note: {note}")
        if "betti" in it:
            b = it["betti"]
            lines.append(f"  b1_delta = {b['b1_delta']}, b2_delta = {b['b2_delta']}, "
                         f"euler = {b['euler']}, signature = {b['signature']}, b_plus = {b['b_plus_after']}")
            lines.append(f"  parity = {it['parity'] or 'undetermined'}")
            for name, r in it["consistency"].items():
                lines.append(f"  consistency ({name}): {r['verdict']}")
                lines.extend(f"    violation: {v}" for v in r["violations"])
                lines.extend(f"    warning: {w}" for w in r["warnings"])
    return "\n".join(lines) + "\n"


def cmd_compute(args) -> tuple[int, str]:
    inst = _load(args.file)
    requests = list(enumerate(inst.surgeries))
    if args.index:
        try:
            requests = [(i, inst.surgeries[i]) for i in args.index]
        except IndexError:
            raise UsageError(f"--index out of range; the file has {len(inst.surgeries)} surgeries") from None
    if args.p is not None or args.k is not None:
        if args.p is None or args.k is None:
            raise UsageError("--p and --k must be given together")
        name = args.framing or "standard"
        inst.framing(name)
        spec = SurgerySpec(args.p, args.k, _parse_pair(args.gamma) if args.gamma else (1, 0))
        requests.append((len(inst.surgeries), SurgeryRequest(name, spec)))

    items = [_run_surgery(inst, i, req) for i, req in requests]
    violated = any(r["verdict"] != "PASS" for it in items for r in it.get("consistency", {}).values())
    code = EXIT_VIOLATION if violated else EXIT_OK
    if args.format == "json":
        return code, dumps({"surgeries": items, "exit_code": code})
    return code, _compute_text(items)


# ---------------------------------------------------------------------------
# framing


def cmd_framing(args) -> tuple[int, str]:
    inst = _load(args.file)
    C = inst.complement
    F = inst.framing(args.framing)
    out: dict[str, Any] = {
        "framing": args.framing,
        "subgroup": [[encode_int(x) for x in F.v1], [encode_int(x) for x in F.v2]],
        "longitudinal_class": [encode_int(x) for x in longitudinal_class(F)],
    }
    try:
        out["rational_topological_preferred"] = is_rational_preferred(C, F)
    except NotApplicableError as exc:
        out["rational_topological_preferred"] = None
        out.setdefault("notes", []).append(str(exc))
    try:
        out["topological_preferred"] = is_topological_preferred(C, F)
    except NotApplicableError as exc:
        out["topological_preferred"] = None
        out.setdefault("notes", []).append(str(exc))
    if args.preferred:
        out["preferred"] = args.preferred
        out["lambda"] = encode_int(lambda_invariant(F, inst.framing(args.preferred)))

    if args.format == "json":
        return EXIT_OK, dumps(out)
    v1, v2 = out["subgroup"]
    lines = [f"framing {args.framing}: H1_phi = <{tuple(v1)}, {tuple(v2)}>",
             f"longitudinal torus class = {tuple(out['longitudinal_class'])}",
             f"rational topological preferred: {_yes_no(out['rational_topological_preferred'])}",
             f"topological preferred: {_yes_no(out['topological_preferred'])}"]
    if args.preferred:
        lines.append(f"lambda = {out['lambda']}  (against {args.preferred})")
    lines.extend(f"note: {n}" for n in out.get("notes", []))
    return EXIT_OK, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# kappa


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise UsageError(f"expected a boolean, got {text!r}")


def cmd_kappa(args) -> tuple[int, str]:
    modes = [args.k2 is not None or args.kdotw is not None, args.cy_fingerprint is not None,
             args.almost_toric is not None]
    if sum(modes) != 1:
        raise UsageError("select exactly one of --k2/--kdotw, --cy-fingerprint, --almost-toric")
    out: dict[str, Any]

    if modes[0]:
        if args.k2 is None or args.kdotw is None:
            raise UsageError("--k2 and --kdotw must be given together")
        try:
            kdotw, omega2 = Fraction(args.kdotw), Fraction(args.omega2)
        except (ValueError, ZeroDivisionError):
            raise UsageError("--kdotw and --omega2 must be rationals such as 3 or -5/2") from None
        minimal = _parse_bool(args.minimal) if args.minimal is not None else True
        try:
            prof = KodairaProfile(args.k2, kdotw, omega2, minimal)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        try:
            kappa = classify_kappa(prof)
        except (UnrealizableProfileError, RequiresMinimalModelError) as exc:
            out = {"mode": "profile", "error": str(exc)}
            return EXIT_UNREALIZABLE, dumps(out) if args.format == "json" else f"error: {exc}\n"
        out = {"mode": "profile", "k_squared": encode_int(args.k2), "k_dot_omega": str(kdotw),
               "omega_squared": str(omega2), "kappa": kappa.value}
        text = f"kappa = {kappa.value}\n"
    elif modes[1]:
        try:
            vals = [int(x) for x in args.cy_fingerprint.split(",")]
            fp = HomologyFingerprint(*vals)
        except (ValueError, TypeError):
            raise UsageError("--cy-fingerprint expects five integers b1,b2,b+,chi,sigma") from None
        label = cy_table_lookup(fp)
        out = {"mode": "cy-fingerprint", "fingerprint": list(fp.as_tuple()),
               "consistent": fp.is_consistent(), "label": label}
        text = f"{label or 'no-match'}\n"
    else:
        try:
            families, kappa = almost_toric_lookup(args.almost_toric)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        out = {"mode": "almost-toric", "base": args.almost_toric, "families": families, "kappa": kappa.value}
        text = "".join(f"{f}\n" for f in families) + f"kappa = {kappa.value}\n"
    return EXIT_OK, dumps(out) if args.format == "json" else text


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog(args) -> tuple[int, str]:
    if args.action == "list":
        entries = catalog.all_entries()
        if args.format == "json":
            return EXIT_OK, dumps({"entries": [{"name": e.name, "provenance": e.provenance} for e in entries]})
        return EXIT_OK, "".join(f"{e.name}\t{e.provenance}\n" for e in entries)
    if not args.name:
        raise UsageError("catalog emit needs an entry NAME")
    try:
        entry = catalog.get_entry(args.name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    return EXIT_OK, dumps(entry_to_document(entry))


# ---------------------------------------------------------------------------


def _load(path: str) -> Instance:
    try:
        text = Path(path).read_text(encoding="utf-8") if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    parser = _Parser(prog="torus-surgery", description="Homology of torus surgeries on 4-manifolds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="surgered H_1, Betti bookkeeping, consistency")
    p.add_argument("file")
    p.add_argument("--index", type=int, action="append", help="run only this surgery (repeatable)")
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--gamma", help="curve coordinates A,B in the framing (default 1,0)")
    p.add_argument("--framing", help="framing name for an ad-hoc surgery (default: standard)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("framing", parents=[common], help="preferred-framing verdicts and lambda")
    p.add_argument("file")
    p.add_argument("--framing", required=True)
    p.add_argument("--preferred")
    p.set_defaults(func=cmd_framing)

    p = sub.add_parser("kappa", parents=[common], help="Kodaira dimension and table lookups")
    p.add_argument("--k2", type=int)
    p.add_argument("--kdotw")
    p.add_argument("--omega2", default="1")
    p.add_argument("--minimal")
    p.add_argument("--cy-fingerprint")
    p.add_argument("--almost-toric")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("catalog", parents=[common], help="list or emit built-in instances")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, report = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputInvariantError as exc:
        print(f"input invariant violation: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TorusSurgeryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.output:
        Path(args.output).write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
