"""Command-line interface.

Subcommands: catalog, lattice, structure, reduce, verify, monoid, poset.
Output formats: table (human), json (machine-readable, re-parseable), dot.
Exit codes: 0 ok, 1 property violation, 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass

try:
    import tomllib
except ImportError:
    import tomli as tomllib

from .catalog import ARCatalog, NotRepresentationFinite, build_catalog
from .grorder import gr_compare
from .invariants import (
    check_gr8,
    check_gr_axioms,
    check_superadditivity,
    e_simples,
    exact_quiver,
    gr_measure,
    gr_predecessors,
    length,
    subobject_poset,
)
from .models import FinitePoset, NumericalMonoid, poset_exact_quiver
from .quiver import Arrow, Quiver
from .structures import (
    ExactStructure,
    SubfunctorClosure,
    axiom_spot_check,
    enumerate_lattice,
    maximal_structure,
    minimal_structure,
    restricted_split_structure,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3

DEFAULT_CAP = int(os.environ.get("EXLAT_CAP", "12"))


class InputError(Exception):
    pass


@dataclass
class SessionConfig:
    quiver_path: str
    p: int | None = None
    cap: int = DEFAULT_CAP
    rad_mode: str = "subcategory"
    fmt: str = "table"


def load_quiver_spec(path: str) -> tuple[Quiver, int]:
    """Quiver spec file: vertices = [..], arrows = [{from, to, name}], p = 2."""
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read quiver spec: {exc}")
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"malformed quiver spec: {exc}")
    try:
        vertices = tuple(str(v) for v in data["vertices"])
        arrows = tuple(
            Arrow(str(a["from"]), str(a["to"]), str(a.get("name", f"a{i}")))
            for i, a in enumerate(data.get("arrows", []), start=1)
        )
        p = int(data.get("p", 2))
    except (KeyError, TypeError) as exc:
        raise InputError(f"quiver spec missing field: {exc}")
    try:
        return Quiver(vertices, arrows), p
    except ValueError as exc:
        raise InputError(str(exc))


def build_session_catalog(cfg: SessionConfig) -> ARCatalog:
    quiver, p = load_quiver_spec(cfg.quiver_path)
    if cfg.p is not None:
        p = cfg.p
    catalog = build_catalog(quiver, p=p)
    max_proj = max((m.total_dim for i, m in enumerate(catalog.indecomposables) if catalog.projective[i]), default=0)
    if cfg.cap < max_proj:
        raise InputError(f"cap {cfg.cap} is below the largest projective dimension {max_proj}")
    return catalog


def parse_selection(text: str, catalog: ARCatalog) -> ExactStructure:
    """--select: 'all', 'none', or 1-based AR-sequence indices like '1,3'."""
    text = text.strip().lower()
    if text == "all":
        return maximal_structure(catalog)
    if text in ("none", ""):
        return minimal_structure(catalog)
    try:
        idxs = [int(t) for t in text.split(",")]
    except ValueError:
        raise InputError(f"bad selection {text!r}: use 'all', 'none' or indices like '1,3'")
    n = len(catalog.ar_sequences)
    for i in idxs:
        if i < 1 or i > n:
            raise InputError(f"AR-sequence index {i} out of range 1..{n}")
    return ExactStructure(catalog, frozenset(i - 1 for i in idxs))


def emit(payload: dict, lines: list[str], fmt: str, dot: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "dot":
        if dot is None:
            raise InputError("this command has no DOT form")
        print(dot)
    else:
        for line in lines:
            print(line)


# -- catalog -----------------------------------------------------------------


def catalog_payload(catalog: ARCatalog) -> dict:
    return {
        "quiver": {
            "vertices": list(catalog.quiver.vertices),
            "arrows": [{"from": a.source, "to": a.target, "name": a.name} for a in catalog.quiver.arrows],
        },
        "p": catalog.p,
        "indecomposables": [
            {
                "index": i,
                "label": catalog.label(i),
                "dim": list(m.dim),
                "projective": catalog.projective[i],
                "injective": catalog.injective[i],
            }
            for i, m in enumerate(catalog.indecomposables)
        ],
        "hom_dims": [list(r) for r in catalog.hom_dims],
        "ar_sequences": [
            {
                "index": s.index + 1,
                "left": catalog.label(s.left_index),
                "middle": catalog.class_label(s.middle_class),
                "right": catalog.label(s.right_index),
            }
            for s in catalog.ar_sequences
        ],
    }


def cmd_catalog(args) -> int:
    cfg = _config(args)
    catalog = build_session_catalog(cfg)
    payload = catalog_payload(catalog)
    lines = [f"quiver with vertices {', '.join(catalog.quiver.vertices)} over F_{catalog.p}",
             f"{len(catalog.indecomposables)} indecomposables, {len(catalog.ar_sequences)} AR sequences", ""]
    for row in payload["indecomposables"]:
        flags = "".join(["P" if row["projective"] else "", "I" if row["injective"] else ""])
        lines.append(f"  {row['label']:<6} dim {tuple(row['dim'])} {flags}")
    lines.append("")
    lines.append("Hom dimensions (rows = source):")
    labels = [r["label"] for r in payload["indecomposables"]]
    width = max(len(l) for l in labels) + 1
    lines.append("  " + " " * width + " ".join(f"{l:>{width}}" for l in labels))
    for lab, row in zip(labels, payload["hom_dims"]):
        lines.append(f"  {lab:>{width}}" + " ".join(f"{v:>{width}}" for v in row))
    lines.append("")
    for row in payload["ar_sequences"]:
        lines.append(f"  AR{row['index']}: {row['left']} >-> {row['middle']} ->> {row['right']}")
    dot = exact_quiver(minimal_structure(catalog)).to_dot()
    emit(payload, lines, cfg.fmt, dot)
    return EXIT_OK


# -- lattice -----------------------------------------------------------------


def cmd_lattice(args) -> int:
    cfg = _config(args)
    catalog = build_session_catalog(cfg)
    lat = enumerate_lattice(catalog)
    structures = lat.structures()
    edges = lat.hasse_edges()
    payload = {
        "size": lat.size,
        "ar_sequences": len(catalog.ar_sequences),
        "structures": [sorted(k + 1 for k in e.selected) for e in structures],
        "hasse_edges": len(edges),
    }
    lines = [f"{lat.size} exact structures on {len(catalog.ar_sequences)} AR sequences; {len(edges)} Hasse edges"]
    for e in structures:
        lines.append(f"  {e.name()}")
    emit(payload, lines, cfg.fmt, lat.to_dot())
    return EXIT_OK


# -- structure ----------------------------------------------------------------


def cmd_structure(args) -> int:
    cfg = _config(args)
    catalog = build_session_catalog(cfg)
    e = parse_selection(args.select, catalog)
    sub = args.subcommand
    if sub == "info":
        simples = e_simples(e)
        payload = {
            "name": e.name(),
            "selected": sorted(k + 1 for k in e.selected),
            "ar_members": [
                {"index": s.index + 1, "right": catalog.label(s.right_index), "member": s.index in e.selected}
                for s in catalog.ar_sequences
            ],
            "simples": [catalog.label(i) for i in simples],
        }
        lines = [f"{e.name()}: selected AR sequences {payload['selected']}"]
        for row in payload["ar_members"]:
            mark = "in " if row["member"] else "out"
            lines.append(f"  AR{row['index']} (ends at {row['right']}): {mark}")
        lines.append(f"  E-simples: {', '.join(payload['simples'])}")
        emit(payload, lines, cfg.fmt)
    elif sub == "simples":
        simples = e_simples(e)
        payload = {"name": e.name(), "simples": [catalog.label(i) for i in simples]}
        emit(payload, [f"{e.name()} simples: {', '.join(payload['simples'])}"], cfg.fmt)
    elif sub == "lengths":
        rows = [(catalog.label(i), length(e, (i,))) for i in range(len(catalog.indecomposables))]
        payload = {"name": e.name(), "lengths": {lab: l for lab, l in rows}}
        lines = [f"{e.name()} lengths:"] + [f"  l({lab}) = {l}" for lab, l in rows]
        emit(payload, lines, cfg.fmt)
    elif sub == "gr":
        rows = []
        for i in range(len(catalog.indecomposables)):
            mu = gr_measure(e, i)
            preds = gr_predecessors(e, i)
            rows.append((catalog.label(i), mu, preds))
        payload = {
            "name": e.name(),
            "measures": {lab: list(mu) for lab, mu, _ in rows},
            "predecessors": {
                lab: {"simple": p.is_simple, "predecessors": [catalog.label(j) for j in p.predecessors]}
                for lab, _, p in rows
            },
        }
        lines = [f"{e.name()} Gabriel-Roiter measures:"]
        for lab, mu, preds in rows:
            tail = "E-simple" if preds.is_simple else "preds " + ", ".join(catalog.label(j) for j in preds.predecessors)
            lines.append(f"  mu({lab}) = {mu}  [{tail}]")
        emit(payload, lines, cfg.fmt)
    elif sub == "quiver":
        gq = exact_quiver(e, rad_mode=cfg.rad_mode)
        payload = {
            "name": e.name(),
            "vertices": list(gq.labels),
            "degree0": [[catalog.label(a), catalog.label(b), n] for (a, b), n in sorted(gq.degree0.items())],
            "degree1": [[catalog.label(a), catalog.label(b), n] for (a, b), n in sorted(gq.degree1.items())],
        }
        lines = [f"Q(A, {e.name()}): vertices {', '.join(gq.labels)}"]
        for a, b, n in payload["degree0"]:
            lines.append(f"  {a} -> {b}  degree 0 x{n} (dotted)")
        for a, b, n in payload["degree1"]:
            lines.append(f"  {a} -> {b}  degree 1 x{n} (solid)")
        emit(payload, lines, cfg.fmt, gq.to_dot())
    else:
        raise InputError(f"unknown structure subcommand {sub!r}")
    return EXIT_OK


# -- reduce --------------------------------------------------------------------


def cmd_reduce(args) -> int:
    cfg = _config(args)
    catalog = build_session_catalog(cfg)
    verts = args.sub_vertices.split(",") if args.sub_vertices else None
    arrs = args.sub_arrows.split(",") if args.sub_arrows is not None else None
    try:
        sub = catalog.quiver.subquiver(verts, arrs)
        e = restricted_split_structure(catalog, sub)
    except ValueError as exc:
        raise InputError(str(exc))
    payload = {
        "subquiver": {"vertices": list(sub.vertices), "arrows": [a.name for a in sub.arrows]},
        "structure": e.name(),
        "selected": sorted(k + 1 for k in e.selected),
        "split_sequences": [
            {"index": s.index + 1, "right": catalog.label(s.right_index), "splits": s.index in e.selected}
            for s in catalog.ar_sequences
        ],
    }
    lines = [f"restriction to vertices {{{', '.join(sub.vertices)}}}, arrows {{{', '.join(a.name for a in sub.arrows)}}}",
             f"E_F = {e.name()} (selected {payload['selected']})"]
    for row in payload["split_sequences"]:
        lines.append(f"  AR{row['index']} (ends {row['right']}): {'splits' if row['splits'] else 'does not split'}")
    emit(payload, lines, cfg.fmt)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------


def _all_structures(catalog: ARCatalog) -> list[ExactStructure]:
    return enumerate_lattice(catalog).structures()


def verify_gr_axioms(catalog, cap) -> dict:
    failures = []
    count = 0
    for e in _all_structures(catalog):
        report = check_gr_axioms(e)
        count += 1
        if not report.passed:
            failures.extend(f"{e.name()}: {v}" for v in report.violations)
    return {"suite": "gr-axioms", "structures": count, "violations": failures, "counterexamples": []}


def verify_gr8(catalog, cap) -> dict:
    violations = []
    counterexamples = []
    for e in _all_structures(catalog):
        report = check_gr8(e, cap=cap)
        violations.extend(f"{e.name()}: {v}" for v in report.violations)
        counterexamples.extend(f"{e.name()}: {s}" for s in report.counterexamples)
    return {
        "suite": "gr8",
        "structures": 2 ** len(catalog.ar_sequences),
        "violations": violations,
        "counterexamples": counterexamples,
    }


def verify_superadditivity(catalog, cap) -> dict:
    failures = []
    for e in _all_structures(catalog):
        report = check_superadditivity(e, cap=cap)
        if not report.passed:
            failures.extend(f"{e.name()}: {v}" for v in report.violations)
    return {
        "suite": "superadditivity",
        "structures": 2 ** len(catalog.ar_sequences),
        "violations": failures,
        "counterexamples": [],
    }


def verify_monotonicity(catalog, cap) -> dict:
    failures = []
    t = catalog.class_table(cap)
    structs = _all_structures(catalog)
    classes = [cls for cls in t.classes if catalog.class_dim(cls) <= cap]
    for e1 in structs:
        for e2 in structs:
            if e1.leq(e2) and e1 != e2:
                for cls in classes:
                    if t.length(e1.mask, cls) > t.length(e2.mask, cls):
                        failures.append(
                            f"l_{e1.name()}({catalog.class_label(cls)}) > l_{e2.name()}(...)"
                        )
    return {"suite": "monotonicity", "structures": len(structs), "violations": failures, "counterexamples": []}


def verify_poset(catalog, cap) -> dict:
    failures = []
    for e in _all_structures(catalog):
        poset = subobject_poset(e, cap)
        for x in poset.nodes:
            if not poset.leq(x, x):
                failures.append(f"{e.name()}: reflexivity fails at {x}")
            for y in poset.nodes:
                if x != y and poset.leq(x, y) and poset.leq(y, x):
                    failures.append(f"{e.name()}: antisymmetry fails at {x}, {y}")
                for z in poset.nodes:
                    if poset.leq(x, y) and poset.leq(y, z) and not poset.leq(x, z):
                        failures.append(f"{e.name()}: transitivity fails at {x}, {y}, {z}")
    return {"suite": "poset", "structures": 2 ** len(catalog.ar_sequences), "violations": failures, "counterexamples": []}


def verify_oracle(catalog, cap) -> dict:
    from .classtable import is_submask

    failures = []
    n = len(catalog.indecomposables)
    table = catalog.class_table(max(cap, 4))
    for e in _all_structures(catalog):
        closure = SubfunctorClosure(catalog, e.selected)
        for zi in range(n):
            for xi in range(n):
                entries = table.seqs.get(((zi,), (xi,)))
                if entries is None:
                    continue
                for coeffs, mask, _ in entries:
                    if is_submask(mask, e.mask) != closure.member(zi, xi, coeffs):
                        failures.append(f"{e.name()}: Ext({catalog.label(zi)}, {catalog.label(xi)}) at {coeffs}")
    return {"suite": "oracle", "structures": 2 ** len(catalog.ar_sequences), "violations": failures, "counterexamples": []}


def verify_gr_order(catalog, cap) -> dict:
    failures = []
    words = [()]
    for k in (1, 2, 3):
        words += list(itertools.combinations(range(1, 5), k))
    for a in words:
        for b in words:
            if gr_compare(a, b) != -gr_compare(b, a):
                failures.append(f"antisymmetry fails at {a}, {b}")
            if (gr_compare(a, b) == 0) != (a == b):
                failures.append(f"reflexivity fails at {a}, {b}")
            for c in words:
                if gr_compare(a, b) <= 0 and gr_compare(b, c) <= 0 and gr_compare(a, c) > 0:
                    failures.append(f"transitivity fails at {a}, {b}, {c}")
    return {"suite": "gr-order", "structures": 0, "violations": failures, "counterexamples": []}


def invariant_fingerprint(quiver: Quiver, p: int, cap: int = 4) -> dict:
    """Field-independent summary of the full invariant set, keyed by dim vectors."""
    catalog = build_catalog(quiver, p=p)
    dims = sorted(tuple(m.dim) for m in catalog.indecomposables)
    by_right = {}
    for e in _all_structures(catalog):
        key = tuple(sorted(tuple(catalog.indecomposables[catalog.ar_sequences[k].right_index].dim) for k in e.selected))
        simples = sorted(tuple(catalog.indecomposables[i].dim) for i in e_simples(e))
        lengths = sorted((tuple(m.dim), length(e, (i,))) for i, m in enumerate(catalog.indecomposables))
        measures = sorted((tuple(m.dim), tuple(gr_measure(e, i))) for i, m in enumerate(catalog.indecomposables))
        gq = exact_quiver(e)
        deg0 = sorted(
            (tuple(catalog.indecomposables[a].dim), tuple(catalog.indecomposables[b].dim), n)
            for (a, b), n in gq.degree0.items()
        )
        deg1 = sorted(
            (tuple(catalog.indecomposables[a].dim), tuple(catalog.indecomposables[b].dim), n)
            for (a, b), n in gq.degree1.items()
        )
        gr8 = check_gr8(e, cap=cap)
        by_right[key] = (simples, lengths, measures, deg0, deg1, len(gr8.counterexamples))
    ar = sorted(
        (tuple(catalog.indecomposables[s.left_index].dim), tuple(catalog.indecomposables[s.right_index].dim))
        for s in catalog.ar_sequences
    )
    return {"dims": dims, "ar": ar, "structures": by_right}


def verify_fields(catalog, cap) -> dict:
    fp2 = invariant_fingerprint(catalog.quiver, 2, cap)
    fp3 = invariant_fingerprint(catalog.quiver, 3, cap)
    failures = []
    if fp2["dims"] != fp3["dims"]:
        failures.append("indecomposable dimension vectors differ between F_2 and F_3")
    if fp2["ar"] != fp3["ar"]:
        failures.append("AR-sequence end terms differ between F_2 and F_3")
    for key in fp2["structures"]:
        if fp2["structures"][key] != fp3["structures"].get(key):
            failures.append(f"invariants differ at structure with right terms {key}")
    return {"suite": "fields", "structures": len(fp2["structures"]), "violations": failures, "counterexamples": []}


def verify_axioms(catalog, cap) -> dict:
    failures = []
    targets = [minimal_structure(catalog), maximal_structure(catalog)]
    if catalog.ar_sequences:
        targets.append(ExactStructure(catalog, frozenset({0})))
    for e in targets:
        report = axiom_spot_check(e, dim_cap=min(cap, 3))
        if not report.passed:
            failures.extend(f"{e.name()}: {v}" for v in report.violations)
    return {"suite": "axioms", "structures": len(targets), "violations": failures, "counterexamples": []}


VERIFY_SUITES = {
    "gr-axioms": verify_gr_axioms,
    "gr8": verify_gr8,
    "superadditivity": verify_superadditivity,
    "monotonicity": verify_monotonicity,
    "poset": verify_poset,
    "oracle": verify_oracle,
    "gr-order": verify_gr_order,
    "fields": verify_fields,
    "axioms": verify_axioms,
}


def cmd_verify(args) -> int:
    cfg = _config(args)
    catalog = build_session_catalog(cfg)
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in VERIFY_SUITES:
            raise InputError(f"unknown suite {name!r}; choose from {', '.join(VERIFY_SUITES)} or 'all'")
    cap = args.cap if args.cap is not None else 4
    results = [VERIFY_SUITES[name](catalog, cap) for name in names]
    payload = {"suites": results}
    lines = []
    failed = False
    for r in results:
        status = "PASS" if not r["violations"] else "FAIL"
        failed = failed or bool(r["violations"])
        lines.append(f"{status} {r['suite']} ({r['structures']} structures checked)")
        for v in r["violations"]:
            lines.append(f"  violation: {v}")
        for s in r["counterexamples"]:
            lines.append(f"  counterexample: {s}")
    emit(payload, lines, cfg.fmt)
    return EXIT_VIOLATION if failed else EXIT_OK


# -- monoid / poset ---------------------------------------------------------------


def cmd_monoid(args) -> int:
    try:
        gens = [int(t) for t in args.gens.split(",")]
        m = NumericalMonoid(gens)
    except ValueError as exc:
        raise InputError(str(exc))
    payload: dict = {"generators": list(m.generators)}
    lines = [f"monoid generated by {sorted(set(gens))}: minimal generators {list(m.generators)}"]
    if args.simples:
        payload["simples"] = list(m.simples())
        lines.append(f"split-simple dimensions: {', '.join(map(str, m.simples()))}")
    if args.length is not None:
        try:
            payload["length"] = {"n": args.length, "value": m.length(args.length)}
        except ValueError as exc:
            raise InputError(str(exc))
        lines.append(f"l(k^{args.length}) = {payload['length']['value']}")
    if args.factorizations is not None:
        try:
            ks = sorted(m.factorization_lengths(args.factorizations))
        except ValueError as exc:
            raise InputError(str(exc))
        payload["factorization_lengths"] = {"n": args.factorizations, "values": ks}
        lines.append(f"factorization lengths of {args.factorizations}: {{{', '.join(map(str, ks))}}}")
    emit(payload, lines, args.format)
    return EXIT_OK


NAMED_POSETS = {
    "diamond": (["s1", "s2", "s3", "s4"], [("s1", "s2"), ("s1", "s3"), ("s2", "s4"), ("s3", "s4")]),
}


def parse_poset(args) -> FinitePoset:
    if args.name:
        if args.name in NAMED_POSETS:
            els, covers = NAMED_POSETS[args.name]
            return FinitePoset.from_covers(els, covers)
        kind, _, num = args.name.partition(":")
        if kind in ("chain", "antichain") and num.isdigit():
            n = int(num)
            els = [f"s{i}" for i in range(1, n + 1)]
            covers = [(f"s{i}", f"s{i+1}") for i in range(1, n)] if kind == "chain" else []
            return FinitePoset.from_covers(els, covers)
        raise InputError(f"unknown poset name {args.name!r}; use diamond, chain:N or antichain:N")
    if args.covers is not None:
        covers = []
        elements = []
        for part in args.covers.split(","):
            part = part.strip()
            if not part:
                continue
            if "<" not in part:
                if part not in elements:
                    elements.append(part)
                continue
            a, b = (t.strip() for t in part.split("<", 1))
            covers.append((a, b))
            for t in (a, b):
                if t not in elements:
                    elements.append(t)
        try:
            return FinitePoset.from_covers(elements, covers)
        except ValueError as exc:
            raise InputError(str(exc))
    raise InputError("poset requires --name or --covers")


def cmd_poset(args) -> int:
    p = parse_poset(args)
    q = poset_exact_quiver(p)
    payload = {
        "elements": list(p.elements),
        "hasse": [list(t) for t in q.hasse_arrows],
        "extension_arrows": [list(t) for t in q.extension_arrows],
    }
    lines = [f"poset on {{{', '.join(p.elements)}}} with extra vertex {q.extra}"]
    for a, b in q.hasse_arrows:
        lines.append(f"  {a} -> {b} (degree 0, dotted)")
    for a, b in q.extension_arrows:
        lines.append(f"  {a} -> {b} (degree 1, solid)")
    emit(payload, lines, args.format, q.to_dot())
    return EXIT_OK


# -- wiring -------------------------------------------------------------------------


def _config(args) -> SessionConfig:
    return SessionConfig(
        quiver_path=args.quiver,
        p=getattr(args, "p", None),
        cap=args.cap if getattr(args, "cap", None) is not None else DEFAULT_CAP,
        rad_mode=getattr(args, "rad_mode", "subcategory"),
        fmt=args.format,
    )


def _add_common(sp, with_quiver=True):
    if with_quiver:
        sp.add_argument("--quiver", required=True, help="path to a quiver spec file")
        sp.add_argument("--p", type=int, default=None, help="override the field characteristic")
        sp.add_argument("--cap", type=int, default=None, help="total-dimension cap for enumerations")
    sp.add_argument("--format", choices=("table", "json", "dot"), default="table")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="exlat", description="exact structures on representation-finite quiver categories")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("catalog", help="indecomposables and AR sequences")
    _add_common(sp)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("lattice", help="the Boolean lattice of exact structures")
    _add_common(sp)
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("structure", help="invariants of one exact structure")
    _add_common(sp)
    sp.add_argument("--select", required=True, help="'all', 'none' or AR indices like '1,3'")
    sp.add_argument("--rad-mode", choices=("subcategory", "ambient"), default="subcategory")
    sp.add_argument("subcommand", choices=("info", "simples", "lengths", "gr", "quiver"))
    sp.set_defaults(func=cmd_structure)

    sp = sub.add_parser("reduce", help="the exact structure split by a restriction functor")
    _add_common(sp)
    sp.add_argument("--sub-vertices", default=None, help="comma-separated vertex subset (default: all)")
    sp.add_argument("--sub-arrows", default=None, help="comma-separated arrow names (default: induced)")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("verify", help="property suites with counterexample reporting")
    _add_common(sp)
    sp.add_argument("suite", help=f"one of {', '.join(VERIFY_SUITES)} or 'all'")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("monoid", help="numerical-monoid model")
    sp.add_argument("--gens", required=True, help="comma-separated generators")
    sp.add_argument("--simples", action="store_true")
    sp.add_argument("--length", type=int, default=None)
    sp.add_argument("--factorizations", type=int, default=None)
    _add_common(sp, with_quiver=False)
    sp.set_defaults(func=cmd_monoid)

    sp = sub.add_parser("poset", help="poset-representation model")
    sp.add_argument("--name", default=None, help="diamond, chain:N or antichain:N")
    sp.add_argument("--covers", default=None, help="covers like 's1<s2,s1<s3'")
    _add_common(sp, with_quiver=False)
    sp.set_defaults(func=cmd_poset)

    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotRepresentationFinite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
