"""Command line front end.

Every invocation runs exactly one command and exits with 0 when all
requested checks passed or an object was produced, 1 when a requested
mathematical check failed (a verdict, not an error), and 2 on bad input,
bad usage, or a failed construction precondition.  Results go to stdout,
diagnostics to stderr.  With identical arguments, input files and seeds
the output bytes are identical; no command ever modifies its input file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .axioms import AXIOM_IDS, DELTA_AXIOMS, CheckReport, run_axiom
from .catalog import (FAMILIES, SearchConfig, catalog, counterexample_search,
                      entry, max_dimension, run_property_suite, verify_entry)
from .constructions import (ConstructionResult, RotaBaxterOp, commutator_lie,
                            dendriform_to_assoc, dendriform_to_prelie,
                            dendriform_to_zinbiel, endo_lie_from_assoc,
                            is_rota_baxter, rb_prelie_from_assoc,
                            rb_prelie_from_lie, twist, yau_iff_check,
                            zinbiel_to_assoc, zinbiel_to_lie)
from .derivations import derivation_space, invder_search, is_invder
from .errors import (InputError, InvderError, NotInvDerError,
                     PreconditionError, SingularMatrixError)
from .model import Algebra, AlgebraDocument, LinearMap, load_algebra, save_algebra
from .rational import parse_rational

BUNDLES = {
    "lie": ("skew_symmetry", "jacobi"),
    "prelie": ("pre_lie",),
    "associative": ("associativity",),
    "zinbiel": ("zinbiel",),
    "dendriform": ("dendriform_1", "dendriform_2", "dendriform_3"),
    "invder-lie": ("invder_jacobi", "identity_25"),
    "invder-prelie": ("invder_prelie",),
    "invder-associative": ("invder_assoc",),
    "invder-zinbiel": ("invder_zinbiel", "zinbiel_aux_44", "zinbiel_aux_45"),
    "invder-dendriform": ("invder_dend_47", "invder_dend_48", "invder_dend_49"),
}

TRANSFORMS = (
    "commutator-lie", "rb-prelie-from-lie", "rb-prelie-from-assoc",
    "endo-lie-from-assoc", "zinbiel-to-assoc", "zinbiel-to-lie",
    "dendriform-to-zinbiel", "dendriform-to-assoc", "dendriform-to-prelie",
)

THEOREM_NAMES = (
    "thm-2.1", "thm-2.2", "prop-2.1", "prop-2.2", "prop-2.3",
    "thm-3.4", "prop-3.4", "prop-3.5", "prop-3.6", "thm-3-rbo",
    "thm-4.2", "prop-4.3", "prop-4.4-4.5", "thm-4-zinbiel-lie",
    "thm-4-dendriform", "thm-yau", "cor-yau",
)


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _fmt_combination(coeffs, basis_names) -> str:
    terms = []
    for c, label in zip(coeffs, basis_names):
        if not c:
            continue
        if c == 1:
            terms.append(f"+ {label}")
        elif c == -1:
            terms.append(f"- {label}")
        elif c < 0:
            terms.append(f"- {-c}*{label}")
        else:
            terms.append(f"+ {c}*{label}")
    if not terms:
        return "0"
    head = terms[0][2:] if terms[0].startswith("+ ") else "-" + terms[0][2:]
    return " ".join([head] + terms[1:])


def _map_lines(m: LinearMap, alg: Algebra, indent: str = "  ") -> list[str]:
    lines = []
    for j, label in enumerate(alg.basis_names):
        col = [m.matrix.entry(i, j) for i in range(alg.dim)]
        lines.append(f"{indent}{label} -> {_fmt_combination(col, alg.basis_names)}")
    return lines


def _report_lines(rep: CheckReport) -> list[str]:
    if rep.holds:
        return [f"{rep.axiom}: holds"]
    if rep.witness is None:
        return [f"{rep.axiom}: fails"]
    w = rep.witness
    return [
        f"{rep.axiom}: fails at ({', '.join(str(i) for i in w.indices)})",
        f"  lhs = ({', '.join(str(c) for c in w.lhs.entries)})",
        f"  rhs = ({', '.join(str(c) for c in w.rhs.entries)})",
    ]


def _print_reports(reports) -> None:
    for rep in reports:
        for line in _report_lines(rep):
            print(line)


def _single_op(args) -> list[str] | None:
    return [args.op] if args.op else None


def _required_map(doc: AlgebraDocument, args, why: str) -> LinearMap:
    if not args.map:
        stored = ", ".join(doc.map_names()) or "none stored"
        raise InputError(f"{why} needs --map naming a stored map ({stored})")
    return doc.map(args.map)


def _required_operator(doc: AlgebraDocument, args, why: str) -> LinearMap:
    if not args.operator:
        stored = ", ".join(doc.map_names()) or "none stored"
        raise InputError(
            f"{why} needs --operator naming a stored map ({stored})")
    return doc.map(args.operator)


def _weight(args):
    return parse_rational(args.weight)


def _write_output(res: ConstructionResult, args) -> None:
    if args.output:
        save_algebra(res.to_document(), args.output)


def _construction_output(res: ConstructionResult, args,
                         head: str | None = None) -> int:
    if args.json:
        _emit_json(res.to_dict())
    else:
        if head:
            print(head)
        _print_reports(res.verification)
        for note in res.notes:
            print(f"note: {note}")
        if args.output:
            print(f"wrote {args.output}")
    _write_output(res, args)
    return 0 if res.ok else 1


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    doc = load_algebra(args.file)
    alg = doc.algebra
    if args.axiom is None:
        if alg.kind_hint is None:
            raise InputError(
                "no --axiom given and the algebra file declares no kind")
        axioms = BUNDLES[alg.kind_hint]
    elif args.axiom in BUNDLES:
        axioms = BUNDLES[args.axiom]
    elif args.axiom in AXIOM_IDS:
        axioms = (args.axiom,)
    else:
        known = ", ".join(list(BUNDLES) + list(AXIOM_IDS))
        raise InputError(f"unknown axiom {args.axiom!r}; known: {known}")
    delta = doc.map(args.map) if args.map else None
    reports = []
    for axiom in axioms:
        if axiom in DELTA_AXIOMS and delta is None:
            raise InputError(f"axiom {axiom!r} needs --map naming a stored map")
        reports.append(run_axiom(alg, axiom, args.op, delta))
    ok = all(r.holds for r in reports)
    if args.json:
        _emit_json({"algebra": alg.name,
                    "axioms": [r.to_dict() for r in reports],
                    "ok": ok})
    else:
        _print_reports(reports)
    return 0 if ok else 1


def cmd_derivations(args) -> int:
    doc = load_algebra(args.file)
    alg = doc.algebra
    space = derivation_space(alg, _single_op(args))
    if args.json:
        payload = {"algebra": alg.name}
        payload.update(space.to_dict())
        _emit_json(payload)
        return 0
    print(f"derivation space of {alg.name} "
          f"(ops: {', '.join(space.op_names)}): dim {space.dim}")
    for t, b in enumerate(space.basis):
        print(f"basis {t}:")
        for line in _map_lines(b, alg):
            print(line)
    return 0


def cmd_invder(args) -> int:
    doc = load_algebra(args.file)
    alg = doc.algebra
    delta = _required_map(doc, args, "the verdict")
    verdict = is_invder(delta, alg, _single_op(args))
    if args.json:
        payload = {"algebra": alg.name, "map": args.map}
        payload.update(verdict.to_dict())
        _emit_json(payload)
    else:
        for key, value in verdict.to_dict().items():
            print(f"{key}: {'yes' if value else 'no'}")
    return 0 if verdict.accepted else 1


def cmd_invder_search(args) -> int:
    doc = load_algebra(args.file)
    alg = doc.algebra
    cap = max_dimension()
    if alg.dim > cap:
        raise InputError(
            f"algebra dimension {alg.dim} exceeds the search cap {cap} "
            "(INVDER_MAX_DIM)")
    result = invder_search(alg, _single_op(args),
                           coefficient_range=args.range,
                           max_samples=args.samples, seed=args.seed)
    if args.json:
        payload = {"algebra": alg.name}
        payload.update(result.to_dict())
        _emit_json(payload)
        return 0 if result.found is not None else 1
    if result.found is not None:
        print(f"found after {result.samples_tried} samples "
              f"(derivation space dim {result.space_dim}):")
        for line in _map_lines(result.found, alg):
            print(line)
        return 0
    if result.certificate is not None:
        print(f"not found: {result.certificate} "
              "(no invertible derivation exists)")
    else:
        print(f"not found within {result.samples_tried} samples "
              f"(derivation space dim {result.space_dim})")
    return 1


def cmd_twist(args) -> int:
    doc = load_algebra(args.file)
    delta = _required_map(doc, args, "the twist")
    try:
        res = twist(doc.algebra, delta, None, args.op, args.force)
    except NotInvDerError as exc:
        raise NotInvDerError(f"{exc}; rerun with --force to twist anyway")
    head = f"twisted algebra {res.algebra.name} (kind {res.algebra.kind_hint})"
    return _construction_output(res, args, head)


def cmd_transform(args) -> int:
    doc = load_algebra(args.file)
    alg = doc.algebra
    delta = doc.map(args.map) if args.map else None
    name = args.name
    if name == "commutator-lie":
        res = commutator_lie(alg, args.op, delta)
    elif name in ("rb-prelie-from-lie", "rb-prelie-from-assoc"):
        rbo = RotaBaxterOp(_required_operator(doc, args, name), _weight(args))
        fn = rb_prelie_from_lie if name == "rb-prelie-from-lie" \
            else rb_prelie_from_assoc
        res = fn(alg, rbo, args.op, delta)
    elif name == "endo-lie-from-assoc":
        res = endo_lie_from_assoc(alg, _required_operator(doc, args, name),
                                  args.op, delta)
    elif name == "zinbiel-to-assoc":
        res = zinbiel_to_assoc(alg, args.op, delta, args.force)
    elif name == "zinbiel-to-lie":
        res = zinbiel_to_lie(alg, args.op, delta, args.force)
    elif name == "dendriform-to-zinbiel":
        res = dendriform_to_zinbiel(alg, delta, args.force)
    elif name == "dendriform-to-assoc":
        res = dendriform_to_assoc(alg, delta, args.force)
    else:
        res = dendriform_to_prelie(alg, delta, args.force)
    head = f"built {res.algebra.name} (kind {res.algebra.kind_hint})"
    return _construction_output(res, args, head)


def cmd_rota_baxter(args) -> int:
    doc = load_algebra(args.file)
    operator = _required_map(doc, args, "the identity")
    weight = _weight(args)
    rep = is_rota_baxter(operator, doc.algebra, args.op, weight)
    if args.json:
        _emit_json({"algebra": doc.algebra.name, "map": args.map,
                    "weight": str(weight), "report": rep.to_dict()})
    else:
        print(f"weight {weight}:")
        _print_reports([rep])
    return 0 if rep.holds else 1


def _theorem_twist(kind: str):
    def run(doc: AlgebraDocument, args):
        delta = _required_map(doc, args, "the twist statement")
        try:
            res = twist(doc.algebra, delta, kind, args.op, args.force)
        except NotInvDerError as exc:
            raise NotInvDerError(f"{exc}; rerun with --force to twist anyway")
        return res.ok, {"construction": res.to_dict()}, res.verification
    return run


def _theorem_axioms(*axioms: str):
    def run(doc: AlgebraDocument, args):
        delta = _required_map(doc, args, "the identity")
        reports = [run_axiom(doc.algebra, axiom, args.op, delta)
                   for axiom in axioms]
        ok = all(r.holds for r in reports)
        return ok, {"reports": [r.to_dict() for r in reports]}, reports
    return run


def _theorem_prop21(doc: AlgebraDocument, args):
    delta = _required_map(doc, args, "the equivalence")
    verdict = is_invder(delta, doc.algebra, _single_op(args))
    if not (verdict.is_derivation and verdict.is_invertible):
        raise PreconditionError(
            "the equivalence quantifies over invertible derivations and the "
            f"map is not one: {verdict.to_dict()}")
    ok = verdict.inverse_is_derivation == verdict.square_condition
    reports = [CheckReport("inverse_is_derivation",
                           verdict.inverse_is_derivation),
               CheckReport("square_condition", verdict.square_condition),
               CheckReport("routes_agree", ok)]
    return ok, {"verdict": verdict.to_dict()}, reports


def _theorem_yau(kind: str | None):
    def run(doc: AlgebraDocument, args):
        delta = _required_map(doc, args, "the equivalence")
        verdict = yau_iff_check(doc.algebra, delta, kind, args.op)
        ok = verdict.forward == verdict.backward
        reports = [CheckReport("forward", verdict.forward),
                   CheckReport("backward", verdict.backward),
                   CheckReport("directions_agree", ok)]
        return ok, {"verdict": verdict.to_dict()}, reports
    return run


def _theorem_commutator(doc: AlgebraDocument, args):
    delta = doc.map(args.map) if args.map else None
    res = commutator_lie(doc.algebra, args.op, delta)
    return res.ok, {"construction": res.to_dict()}, res.verification


def _theorem_endo(doc: AlgebraDocument, args):
    delta = doc.map(args.map) if args.map else None
    operator = _required_operator(doc, args, "the endomorphism bracket")
    res = endo_lie_from_assoc(doc.algebra, operator, args.op, delta)
    return res.ok, {"construction": res.to_dict()}, res.verification


def _theorem_rbo(doc: AlgebraDocument, args):
    delta = doc.map(args.map) if args.map else None
    rbo = RotaBaxterOp(_required_operator(doc, args, "the pre-Lie passage"),
                       _weight(args))
    res = rb_prelie_from_assoc(doc.algebra, rbo, args.op, delta)
    return res.ok, {"construction": res.to_dict()}, res.verification


def _theorem_zinbiel_lie(doc: AlgebraDocument, args):
    delta = doc.map(args.map) if args.map else None
    res = zinbiel_to_lie(doc.algebra, args.op, delta, args.force)
    return res.ok, {"construction": res.to_dict()}, res.verification


THEOREMS = {
    "thm-2.1": _theorem_twist("lie"),
    "thm-2.2": _theorem_twist("prelie"),
    "prop-2.1": _theorem_prop21,
    "prop-2.2": _theorem_axioms("identity_25"),
    "prop-2.3": _theorem_axioms("invder_prelie"),
    "thm-3.4": _theorem_twist("associative"),
    "prop-3.4": _theorem_axioms("invder_assoc"),
    "prop-3.5": _theorem_commutator,
    "prop-3.6": _theorem_endo,
    "thm-3-rbo": _theorem_rbo,
    "thm-4.2": _theorem_twist("zinbiel"),
    "prop-4.3": _theorem_axioms("invder_zinbiel"),
    "prop-4.4-4.5": _theorem_axioms("zinbiel_aux_44", "zinbiel_aux_45"),
    "thm-4-zinbiel-lie": _theorem_zinbiel_lie,
    "thm-4-dendriform": _theorem_twist("dendriform"),
    "thm-yau": _theorem_yau("associative"),
    "cor-yau": _theorem_yau(None),
}


def cmd_verify_theorem(args) -> int:
    doc = load_algebra(args.file)
    ok, payload, reports = THEOREMS[args.name](doc, args)
    if args.json:
        data = {"theorem": args.name, "verified": ok}
        data.update(payload)
        _emit_json(data)
    else:
        _print_reports(reports)
        print(f"theorem {args.name}: {'verified' if ok else 'refuted'}")
    return 0 if ok else 1


def cmd_suite(args) -> int:
    report = run_property_suite(seed=args.seed, samples=args.samples)
    if args.json:
        sys.stdout.write(report.to_json())
        return 0 if report.ok else 1
    print(f"suite seed={report.seed} samples={report.samples}")
    print(f"entries: {report.entries}")
    print(f"accepted (algebra, map) pairs: {report.accepted_pairs}")
    print(f"route agreement instances: {report.prop21_instances}")
    total = sum(slot["instances"] for slot in report.checks.values())
    print(f"check instances: {total} across {len(report.checks)} checks")
    print(f"violations: {len(report.violations)}")
    for row in report.violations:
        print(f"  {row['entry']} {row['delta']} {row['check']} "
              f"at {row['indices']}")
    return 0 if report.ok else 1


def cmd_search_counterexample(args) -> int:
    config = SearchConfig(family=args.family, max_dim=args.max_dim,
                          coefficient_range=args.range,
                          max_samples=args.samples, seed=args.seed,
                          tables_per_dim=args.tables_per_dim)
    report = counterexample_search(config)
    if args.json:
        sys.stdout.write(report.to_json())
        return 0 if report.ok else 1
    print(f"family {config.family}: examined {report.algebras_examined} "
          f"algebras, {report.candidates_found} twist candidates")
    for row in report.rows:
        print(f"  {row['algebra']} dim {row['dim']} "
              f"derivations {row['derivation_dim']} "
              f"candidates {row['twisted_candidates']}")
    if report.findings:
        print(f"findings: {len(report.findings)}")
        for f in report.findings:
            print(f"  {f['algebra']}: twisted {f['check']} fails at "
                  f"({', '.join(str(i) for i in f['witness']['indices'])})")
        return 1
    print("no findings within bounds "
          f"(max_dim {config.max_dim}, range {config.coefficient_range}, "
          f"samples {config.max_samples}, seed {config.seed})")
    return 0


def cmd_catalog(args) -> int:
    entries = [entry(args.entry)] if args.entry else list(catalog())
    if args.dump:
        os.makedirs(args.dump, exist_ok=True)
        written = []
        for e in entries:
            path = os.path.join(args.dump, f"{e.id}.json")
            save_algebra(e.document, path)
            written.append(path)
        if args.json:
            _emit_json({"written": written})
        else:
            for path in written:
                print(f"wrote {path}")
        return 0
    if args.verify:
        all_rows = {e.id: verify_entry(e) for e in entries}
        ok = all(row["ok"] for rows in all_rows.values() for row in rows)
        if args.json:
            _emit_json({"ok": ok, "entries": all_rows})
        else:
            for entry_id, rows in all_rows.items():
                bad = [row for row in rows if not row["ok"]]
                print(f"{entry_id}: {len(rows)} facts, "
                      f"{len(bad)} mismatches")
                for row in bad:
                    print(f"  {row['fact']}: expected {row['expected']}, "
                          f"derived {row['derived']}")
        return 0 if ok else 1
    if args.json:
        _emit_json({"entries": [
            {"id": e.id, "dim": e.algebra.dim, "kind": e.algebra.kind_hint,
             "ops": list(e.algebra.op_names()),
             "maps": list(e.document.map_names())}
            for e in entries]})
    else:
        for e in entries:
            kind = e.algebra.kind_hint or "untagged"
            maps = ", ".join(e.document.map_names()) or "none"
            print(f"{e.id}: dim {e.algebra.dim}, kind {kind}, maps {maps}")
    return 0


# ------------------------------------------------------------------ parser


def _add_command(sub, name: str, handler, help_: str, *, file: bool = True):
    sp = sub.add_parser(name, help=help_, description=help_)
    if file:
        sp.add_argument("file", help="algebra file (JSON)")
    sp.add_argument("--json", action="store_true",
                    help="emit a JSON report instead of plain text")
    sp.set_defaults(handler=handler)
    return sp


def _seeded(sp, samples_default: int) -> None:
    sp.add_argument("--seed", type=int, default=0, help="random seed")
    sp.add_argument("--samples", type=int, default=samples_default,
                    help="sampling budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invder",
        description="Exact verification of algebras twisted by invertible "
                    "derivations whose inverses are derivations.")
    sub = parser.add_subparsers(dest="command", metavar="command",
                                required=True)

    sp = _add_command(sub, "check", cmd_check,
                      "run axiom checks against an algebra file")
    sp.add_argument("--op", help="operation name (single-op algebras "
                                 "may omit it)")
    sp.add_argument("--axiom", help="axiom identifier or bundle name "
                                    "(default: the file's kind bundle)")
    sp.add_argument("--map", help="stored map for the identities that "
                                  "take one")

    sp = _add_command(sub, "derivations", cmd_derivations,
                      "compute the derivation space")
    sp.add_argument("--op", help="restrict to one operation")

    sp = _add_command(sub, "invder", cmd_invder,
                      "report the four verdict flags for a stored map")
    sp.add_argument("--map", required=True, help="stored map to test")
    sp.add_argument("--op", help="restrict to one operation")

    sp = _add_command(sub, "invder-search", cmd_invder_search,
                      "search the derivation space for an accepted map")
    sp.add_argument("--op", help="restrict to one operation")
    _seeded(sp, 400)
    sp.add_argument("--range", type=int, default=3,
                    help="coefficient range for sampled combinations")

    sp = _add_command(sub, "twist", cmd_twist,
                      "twist the product by a stored map and verify")
    sp.add_argument("--map", required=True, help="stored map to twist by")
    sp.add_argument("--op", help="operation name for multi-op files")
    sp.add_argument("--force", action="store_true",
                    help="twist even when the map is not accepted")
    sp.add_argument("-o", "--output", metavar="FILE",
                    help="write the twisted algebra to FILE")

    sp = _add_command(sub, "transform", cmd_transform,
                      "apply a passage between structure kinds", file=False)
    sp.add_argument("name", choices=TRANSFORMS, metavar="name",
                    help="one of: " + ", ".join(TRANSFORMS))
    sp.add_argument("file", help="algebra file (JSON)")
    sp.add_argument("--op", help="operation name for multi-op files")
    sp.add_argument("--map", help="carried map, verified on the result")
    sp.add_argument("--operator", help="stored map used as the Rota-Baxter "
                                       "operator or endomorphism")
    sp.add_argument("--weight", default="0",
                    help="Rota-Baxter weight as a rational (default 0)")
    sp.add_argument("--force", action="store_true",
                    help="skip the source axiom gate")
    sp.add_argument("-o", "--output", metavar="FILE",
                    help="write the constructed algebra to FILE")

    sp = _add_command(sub, "rota-baxter", cmd_rota_baxter,
                      "check the Rota-Baxter identity for a stored map")
    sp.add_argument("--map", required=True, help="stored map to test")
    sp.add_argument("--op", help="operation name for multi-op files")
    sp.add_argument("--weight", default="0",
                    help="weight as a rational (default 0)")

    sp = _add_command(sub, "verify-theorem", cmd_verify_theorem,
                      "verify one named statement on a concrete instance",
                      file=False)
    sp.add_argument("name", choices=THEOREM_NAMES, metavar="name",
                    help="one of: " + ", ".join(THEOREM_NAMES))
    sp.add_argument("file", help="algebra file (JSON)")
    sp.add_argument("--op", help="operation name for multi-op files")
    sp.add_argument("--map", help="stored map the statement quantifies over")
    sp.add_argument("--operator", help="stored map used as the operator")
    sp.add_argument("--weight", default="0",
                    help="Rota-Baxter weight as a rational (default 0)")
    sp.add_argument("--force", action="store_true",
                    help="run the construction even when a gate fails")

    sp = _add_command(sub, "suite", cmd_suite,
                      "run the randomized property suite over the catalog",
                      file=False)
    _seeded(sp, 100)

    sp = _add_command(sub, "search-counterexample", cmd_search_counterexample,
                      "hunt for twists that break Jacobi when the inverse "
                      "is not a derivation", file=False)
    sp.add_argument("--family", required=True, choices=FAMILIES,
                    metavar="family", help="one of: " + ", ".join(FAMILIES))
    sp.add_argument("--max-dim", type=int, default=4,
                    help="largest dimension to generate")
    _seeded(sp, 200)
    sp.add_argument("--range", type=int, default=3,
                    help="coefficient range for sampled combinations")
    sp.add_argument("--tables-per-dim", type=int, default=10,
                    help="random tables kept per dimension")

    sp = _add_command(sub, "catalog", cmd_catalog,
                      "list, dump, or re-verify the built-in examples",
                      file=False)
    sp.add_argument("--entry", help="restrict to one entry id")
    sp.add_argument("--dump", metavar="DIR",
                    help="write each entry to DIR as an algebra file")
    sp.add_argument("--verify", action="store_true",
                    help="re-derive and compare every recorded fact")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (InputError, SingularMatrixError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvderError as exc:
        # an internal cross-check refuted itself: a verdict, not bad input
        print(f"refuted: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
