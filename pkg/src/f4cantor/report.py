"""Report documents: dict builders shared by the JSON and Markdown outputs.

All pass/fail flags in these documents come from exact comparisons made by
the underlying modules; decimal strings are labeled previews, never inputs
to a decision.
"""

from __future__ import annotations

import datetime as _dt
import json
from typing import Any

from .surd import QuadSurd
from .thickness import CertReport


def surd_entry(x: QuadSurd, precision: int) -> dict:
    return {"exact": x.canonical_text(), "decimal_preview": x.to_decimal(precision)}


def endpoints_doc(precision: int) -> dict:
    from .decompose import product_interval
    from .segments import root_segment

    root = root_segment()
    plo, phi = product_interval()
    return {
        "root_interval": {"lo": surd_entry(root.lo, precision),
                          "hi": surd_entry(root.hi, precision),
                          "length": surd_entry(root.length, precision)},
        "product_interval": {"lo": surd_entry(plo, precision),
                             "hi": surd_entry(phi, precision)},
        "passed": True,
    }


def bounds_doc(precision: int) -> dict:
    from . import constants
    from .decompose import mu_delta_bounds
    from .surd import cross_field_cmp
    from .thickness import (gamma_exclusion_check, gamma_value, global_lambda,
                            tau_lower, type_bound_records)

    records = type_bound_records()
    lam = global_lambda(records)
    tau = tau_lower(records)
    gamma = gamma_value(lam)
    mu, delta = mu_delta_bounds()
    gex = gamma_exclusion_check()
    rows = []
    for rec in records:
        el, er, cap = constants.TYPE_BOUNDS[rec.type_id]
        ok = rec.bound_left == el and rec.bound_right == er and rec.bound <= cap
        rows.append({
            "type": rec.type_id,
            "bound_left": surd_entry(rec.bound_left, precision),
            "bound_right": surd_entry(rec.bound_right, precision),
            "cap": f"{cap.numerator}/{cap.denominator}",
            "passed": ok,
        })
    checks = {
        "lambda": {**surd_entry(lam, precision), "passed": lam == constants.LAMBDA},
        "tau_lower": {**surd_entry(tau, precision),
                      "passed": tau == constants.TAU_LOWER and tau > 1},
        "gamma": {**surd_entry(gamma, precision), "passed": gex["ok"]},
        "mu_bound": {**surd_entry(mu, precision), "passed": mu == constants.MU_BOUND},
        "delta_bound": {**surd_entry(delta, precision),
                        "passed": delta == constants.DELTA_BOUND},
        "mu_below_10_plus_6_sqrt2": {
            "exact": "mu_bound < 10 + 6*sqrt(2)",
            "passed": cross_field_cmp(mu, constants.TEN_PLUS_6_SQRT2) < 0,
        },
    }
    passed = all(r["passed"] for r in rows) and all(c["passed"] for c in checks.values())
    return {"type_bounds": rows, "constants": checks, "passed": passed}


def certify_doc(rep: CertReport, precision: int) -> dict:
    doc = {
        "depth": rep.depth,
        "gap_count": rep.gap_count,
        "lambda": surd_entry(rep.lam, precision),
        "tau_lower": surd_entry(rep.tau, precision),
        "gamma": surd_entry(rep.gamma, precision),
        "worst_ratio": surd_entry(rep.worst_ratio, precision),
        "ratio_all_pass": rep.ratio_all_pass,
        "log_condition_all_pass": rep.log_condition_all_pass,
        "constant_checks": [
            {"name": c.name, "computed": c.computed.canonical_text(),
             "expected": c.expected.canonical_text(), "passed": c.passed}
            for c in rep.constant_checks
        ],
        "failures": [{"depth": f.depth, "index": f.index, "kind": f.kind}
                     for f in rep.failures],
        "passed": rep.passed,
    }
    if rep.worst_gap is not None:
        g = rep.worst_gap
        doc["worst_gap_segments"] = [seg.dump_line(precision)
                                     for seg in (g.parent, g.left, g.right)]
    return doc


def oracle_doc(max_word_len: int, backend=None) -> dict:
    from .oracle import cylinder_level_check, containment_check

    levels = []
    for length in range(3, max_word_len + 1):
        cyl = cylinder_level_check(length, backend=backend)
        lem = containment_check(length - 2, backend=backend)
        levels.append({
            "word_len": length,
            "cylinders": cyl["count"],
            "transfer_count": cyl["transfer_count"],
            "disjoint": cyl["disjoint"],
            "nested": cyl["nested"],
            "tree_level_bound": lem.level_bound,
            "max_stop_level": lem.max_stop_level,
            "engine_matches_oracle": lem.ok,
            "passed": cyl["ok"] and lem.ok,
        })
    return {"levels": levels, "passed": all(l["passed"] for l in levels)}


def decompose_doc(target_text: str, steps: int, precision: int,
                  verify_blocks: int = 0, disc: int | None = None) -> dict:
    from .decompose import decompose, verify_construction, witness_for_target
    from .surd import parse_surd

    target = parse_surd(target_text, disc=disc)
    state, widths = decompose(target, steps, record_widths=True)
    doc: dict[str, Any] = {
        "target": surd_entry(target, precision),
        "steps": steps,
        "x_word": list(state.seg_x.word),
        "y_word": list(state.seg_y.word),
        "x_interval": {"lo": surd_entry(state.seg_x.lo, precision),
                       "hi": surd_entry(state.seg_x.hi, precision)},
        "y_interval": {"lo": surd_entry(state.seg_y.lo, precision),
                       "hi": surd_entry(state.seg_y.hi, precision)},
        "transcript": [
            {"factor": s.factor, "child": s.child, "type": s.type_id,
             "child_lo": s.lo.canonical_text(), "child_hi": s.hi.canonical_text(),
             "width_preview": s.width.to_decimal(precision)}
            for s in state.history
        ],
        "final_width": surd_entry(state.width, precision),
        "width_strictly_decreasing": all(
            a > b for a, b in zip(widths, widths[1:])),
        "passed": state.contains_target(),
    }
    if verify_blocks:
        witness, _ = witness_for_target(target, steps=max(steps, 200), blocks=verify_blocks)
        ver = verify_construction(witness, target, i_max=min(5, verify_blocks))
        doc["witness"] = {
            "digits": list(witness.digits),
            "junctions": list(witness.junctions),
            "cuts": [list(c) for c in witness.cuts],
            "patterns_ok": ver["patterns_ok"],
            "junction_distances": [f"{float(d):.3e}" for d in ver["junction_distances"]],
            "distances_strictly_decreasing": ver["distances_strictly_decreasing"],
            "off_junction_ok": ver["off_junction_ok"],
            "passed": ver["ok"],
        }
        doc["passed"] = doc["passed"] and ver["ok"]
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def stamp(doc: dict, command: str, params: dict) -> dict:
    out = {"command": command, "params": params, "generated_at":
           _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")}
    out.update(doc)
    return out


def _md_value(v: Any) -> str:
    if isinstance(v, bool):
        return "PASS" if v else "FAIL"
    if isinstance(v, dict) and "exact" in v:
        dec = v.get("decimal_preview")
        return f"`{v['exact']}` ≈ {dec}" if dec else f"`{v['exact']}`"
    return str(v)


def to_markdown(doc: dict) -> str:
    """Markdown mirror of the JSON document: one section per top-level key,
    tables for lists of flat dicts."""
    lines = [f"# {doc.get('command', 'report')}", ""]
    for key, value in doc.items():
        if key in ("command",):
            continue
        lines.append(f"## {key}")
        lines.extend(_md_block(value))
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def _md_block(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
        keys = list(value[0].keys())
        out = [pad + "| " + " | ".join(keys) + " |",
               pad + "|" + "---|" * len(keys)]
        for row in value:
            out.append(pad + "| " + " | ".join(_md_value(row.get(k, "")) for k in keys) + " |")
        return out
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                out.append(f"{pad}- **{k}**:")
                out.extend(_md_block(v, indent + 1))
            else:
                out.append(f"{pad}- **{k}**: {_md_value(v)}")
        return out
    return [pad + _md_value(value)]
