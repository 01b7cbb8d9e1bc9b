"""Batch front end: parse job documents, dispatch computations, and emit
deterministic JSON reports.

Exit codes: 0 success, 1 invalid input, 2 size cap exceeded, 3 internal
invariant violation (or any unexpected failure).  Reports are printed to
standard output and, with ``--json <path>``, written byte-identically to a
file.  ``--batch <dir>`` runs one subcommand over every ``*.job`` document
in a directory and emits a single combined report.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import hodge, serialize, topology, unitary
from .characters import CharacterTable
from .errors import GcoverError, ValidationError
from .jobdoc import SUBCOMMANDS, load_document


class _ArgumentParser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; here 2 means a cap was
    exceeded, so rewrap them as validation errors (exit code 1)."""

    def error(self, message):
        raise ValidationError(f"argument error: {message}")


def _build_parser():
    parser = _ArgumentParser(
        prog="gcover",
        description="Exact invariants of finite group actions on surfaces, "
                    "computed from job documents.",
    )
    parser.add_argument("subcommand", choices=SUBCOMMANDS,
                        help="which report to compute")
    parser.add_argument("input", nargs="?", default=None,
                        help="path to a job document (omit with --batch)")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="also write the report to PATH as JSON")
    parser.add_argument("--cap-group", metavar="N", type=int, default=None,
                        help="largest allowed group order (default 2000)")
    parser.add_argument("--cap-oracle", metavar="N", type=int, default=None,
                        help="largest group order for the chain-complex "
                             "cross-check (default 24)")
    parser.add_argument("--batch", metavar="DIR", default=None,
                        help="process every *.job document in DIR")
    return parser


# --- report builders --------------------------------------------------------------


def _require_datum(doc, sub):
    if doc.datum is None:
        raise ValidationError(f"the {sub} subcommand requires a [cover] section")
    return doc.datum


def _table(doc):
    if not hasattr(doc, "_table"):
        doc._table = CharacterTable(doc.group)
    return doc._table


def _chartable(doc):
    table = _table(doc)
    table.verify()
    G = doc.group
    return {
        "group_order": G.order,
        "permutation_degree": G.degree,
        "class_count": table.r,
        "class_sizes": list(table.sizes),
        "class_representatives": list(table.reps),
        "representative_orders": [G.order_of(z) for z in table.reps],
        "degrees": list(table.degrees),
        "frobenius_schur_indicators": [table.fs_indicator(i)
                                       for i in range(table.r)],
        "galois_orbits": [list(o) for o in table.galois_orbits()],
        "character_values": [list(row) for row in table.chars],
        "orthogonality_verified": True,
    }


def _geometry(doc):
    datum = _require_datum(doc, "geometry")
    report = datum.geometry_report()
    report["handles"] = list(datum.handles)
    report["branches"] = list(datum.branches)
    return report


def _hodge(doc):
    datum = _require_datum(doc, "hodge")
    table = _table(doc)
    h0 = hodge.h0_character(datum, table)
    h1 = hodge.h1_character(datum, table)
    genus = datum.total_genus()
    weighted = sum(table.degrees[i] * m for i, m in enumerate(h0))
    duality = all(
        h1[i] == h0[i] + h0[table.dual_index(i)] for i in range(table.r)
    )
    report = {
        "class_count": table.r,
        "degrees": list(table.degrees),
        "frobenius_schur_indicators": [table.fs_indicator(i)
                                       for i in range(table.r)],
        "h0_multiplicities": list(h0),
        "h1_multiplicities": list(h1),
        "total_genus": genus,
        "h0_weighted_sum": weighted,
        "h0_sum_matches_genus": weighted == genus,
        "duality_ok": duality,
    }
    if doc.group.order <= doc.cap_oracle:
        oracle = hodge.h1_chain_complex_oracle(datum, table,
                                               cap=doc.cap_oracle)
        report["h1_oracle"] = list(oracle)
        report["h1_oracle_matches"] = list(oracle) == list(h1)
    else:
        report["h1_oracle"] = None
        report["h1_oracle_matches"] = None
    return report


def _sym2(doc):
    datum = _require_datum(doc, "sym2")
    return hodge.sym2_report(datum, _table(doc))


def _check_endo(doc):
    datum = _require_datum(doc, "check-endo")
    return hodge.check_theorem_endo(datum, _table(doc))


def _check_gn(doc):
    datum = _require_datum(doc, "check-gn")
    if not doc.subgroups:
        raise ValidationError(
            "check-gn requires at least one [subgroup NAME] section")
    table = _table(doc)
    out = {}
    for name in sorted(doc.subgroups):
        ids = doc.subgroups[name]
        report = hodge.check_theorem_GN(datum, table, ids)
        out[name] = {"subgroup_order": len(ids), **report}
    return {"subgroups": out}


def _unitary(doc):
    datum = _require_datum(doc, "unitary")
    return unitary.isotype_report(datum, _table(doc))


def _model(doc, sub):
    datum = _require_datum(doc, sub)
    return topology.build_cover_model(datum, cap=doc.cap_topology)


def _lifts(doc, model):
    out = {}
    for name in sorted(doc.curves):
        out[name] = topology.lift_curve(model, doc.curves[name]["letters"])
    return out


def _lift_entry(doc, name, lift):
    return {
        "word": doc.curves[name]["word"],
        "monodromy": lift["monodromy"],
        "monodromy_order": lift["monodromy_order"],
        "component_count": lift["component_count"],
        "components": [
            {"start": c["start"], "class": list(c["class"])}
            for c in lift["components"]
        ],
    }


def _lift(doc):
    model = _model(doc, "lift")
    lifts = _lifts(doc, model)
    return {
        "h1_rank": model.dim,
        "curves": {name: _lift_entry(doc, name, lifts[name])
                   for name in sorted(lifts)},
    }


def _twist(doc):
    model = _model(doc, "twist")
    lifts = _lifts(doc, model)
    curves = {}
    for name in sorted(lifts):
        T = topology.transvection(model, lifts[name])
        curves[name] = {
            "word": doc.curves[name]["word"],
            "component_count": lifts[name]["component_count"],
            "transvection": T,
            "checks": {
                "form_preserving": True,
                "two_step_unipotent": True,
                "determinant_one": True,
                "deck_equivariant": True,
            },
        }
    return {"h1_rank": model.dim, "curves": curves}


def _certify(doc):
    model = _model(doc, "certify")
    table = _table(doc)
    lifts = [lift for _, lift in sorted(_lifts(doc, model).items())]
    datum = doc.datum
    if doc.orbit is not None:
        if not (0 <= doc.orbit < table.r):
            raise ValidationError(
                f"options.orbit {doc.orbit} out of range 0..{table.r - 1}")
        orbits = [table.orbit_of(doc.orbit)]
    else:
        orbits = [
            orbit for orbit in table.galois_orbits()
            if any(hodge.h1_multiplicity(datum, table, i) > 0 for i in orbit)
        ]
    certificates = [
        topology.twist_algebra_certificate(model, table, orbit, lifts)
        for orbit in orbits
    ]
    return {
        "h1_rank": model.dim,
        "curve_names": sorted(doc.curves),
        "certificates": certificates,
    }


_BUILDERS = {
    "chartable": _chartable,
    "geometry": _geometry,
    "hodge": _hodge,
    "sym2": _sym2,
    "check-endo": _check_endo,
    "check-gn": _check_gn,
    "unitary": _unitary,
    "lift": _lift,
    "twist": _twist,
    "certify": _certify,
}


def build_report(subcommand, doc):
    """The JSON-native report of one subcommand on one parsed document."""
    if subcommand not in _BUILDERS:
        raise ValidationError(f"unknown subcommand {subcommand!r}")
    return serialize.jsonable(_BUILDERS[subcommand](doc))


# --- batch mode --------------------------------------------------------------------


def _batch_one(subcommand, path, cap_group, cap_oracle):
    try:
        doc = load_document(path, cap_group=cap_group, cap_oracle=cap_oracle)
        if doc.reports is not None and subcommand not in doc.reports:
            return {"status": "skipped",
                    "reason": "document selects reports "
                              + ", ".join(doc.reports)}
        return {"status": "ok", "report": build_report(subcommand, doc)}
    except GcoverError as exc:
        return {"status": "error", "exit_code": exc.exit_code,
                "message": str(exc)}
    except Exception as exc:  # pragma: no cover - defensive
        return {"status": "error", "exit_code": 3,
                "message": f"internal error: {exc}"}


def _run_batch(args):
    directory = args.batch
    if not os.path.isdir(directory):
        raise ValidationError(f"--batch directory not found: {directory}")
    names = sorted(n for n in os.listdir(directory) if n.endswith(".job"))
    if not names:
        raise ValidationError(f"no *.job documents in {directory}")
    workers = min(8, len(names))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(
            lambda n: _batch_one(args.subcommand,
                                 os.path.join(directory, n),
                                 args.cap_group, args.cap_oracle),
            names,
        ))
    jobs = {name: result for name, result in zip(names, results)}
    report = {"subcommand": args.subcommand, "job_count": len(names),
              "jobs": jobs}
    code = 0
    for result in results:
        if result["status"] == "error":
            code = max(code, result["exit_code"])
    return report, code


# --- entry point -------------------------------------------------------------------


def _emit(report, json_path):
    text = serialize.dumps(report)
    sys.stdout.write(text)
    if json_path is not None:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.batch is not None and args.input is not None:
            raise ValidationError(
                "give either an input file or --batch, not both")
        if args.batch is None and args.input is None:
            raise ValidationError(
                "an input document is required (or use --batch <dir>)")
        if args.batch is not None:
            report, code = _run_batch(args)
            _emit(report, args.json)
            return code
        doc = load_document(args.input, cap_group=args.cap_group,
                            cap_oracle=args.cap_oracle)
        report = build_report(args.subcommand, doc)
        _emit(report, args.json)
        return 0
    except GcoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except SystemExit:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
