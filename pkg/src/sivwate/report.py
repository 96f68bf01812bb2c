"""Report assembly: structured JSON plus a human-readable markdown table view.

The scale factor (e.g. per-1000) is applied only here, never inside the
estimators; every number traces to exactly one upstream operation.
"""

import json

import numpy as np


def scaled(value, scale):
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        return [scaled(v, scale) for v in value]
    v = float(value) * scale
    return v


def estimate_block(report, scale=1.0):
    block = {
        "estimand": report.estimand,
        "point": scaled(report.point, scale),
        "denominator": float(report.denominator),
        "n": int(report.n),
    }
    if report.interval is not None:
        lo, hi, level = report.interval
        block["interval"] = {"lower": scaled(lo, scale), "upper": scaled(hi, scale),
                             "level": float(level)}
    if report.notes:
        block["notes"] = {k: v for k, v in sorted(report.notes.items())}
    return block


def to_json(report_dict) -> str:
    """Canonical byte-stable serialization."""
    return json.dumps(report_dict, sort_keys=True, indent=2, allow_nan=True) + "\n"


def _fmt(value, scale):
    if value is None or (isinstance(value, float) and not np.isfinite(value)):
        return "-"
    return f"{value:.1f}" if scale != 1.0 else f"{value:.4g}"


def to_markdown(report_dict) -> str:
    """Tables mirroring the JSON report, rounded for reading."""
    scale = report_dict.get("scale", 1.0)
    lines = ["# Analysis report", ""]
    if scale != 1.0:
        lines += [f"Effect columns are scaled by {scale:g}.", ""]

    estimates = report_dict.get("estimates", {})
    if estimates:
        lines += ["## Estimates", "", "| Method | Estimate | CI |", "|---|---|---|"]
        for name, block in sorted(estimates.items()):
            ci = block.get("interval")
            ci_txt = (f"({_fmt(ci['lower'], scale)}, {_fmt(ci['upper'], scale)})"
                      if ci else "-")
            lines.append(f"| {name} | {_fmt(block['point'], scale)} | {ci_txt} |")
        lines.append("")

    subgroups = report_dict.get("subgroups", {})
    if subgroups:
        lines += ["## Subgroups", "", "| Level | Estimate | CI |", "|---|---|---|"]
        for level, block in sorted(subgroups.items()):
            ci = block.get("interval")
            ci_txt = (f"({_fmt(ci['lower'], scale)}, {_fmt(ci['upper'], scale)})"
                      if ci else "-")
            lines.append(f"| {level} | {_fmt(block['point'], scale)} | {ci_txt} |")
        lines.append("")

    profile = report_dict.get("profile", [])
    if profile:
        lines += ["## Weighted population profile", "",
                  "| Covariate | Weighted mean | Unweighted mean | Ratio |",
                  "|---|---|---|---|"]
        for row in profile:
            lines.append(
                f"| {row['name']} | {row['weighted_mean']:.2f} "
                f"| {row['unweighted_mean']:.2f} | {row['ratio']:.2f} |"
            )
        lines.append("")

    bounds_rows = report_dict.get("bounds", [])
    if bounds_rows:
        lines += ["## Bounds on the global average effect", "",
                  "| m | Bounds | CI |", "|---|---|---|"]
        for row in bounds_rows:
            bounds_txt = f"({_fmt(row['lower'], scale)}, {_fmt(row['upper'], scale)})"
            if "ci_lower" in row:
                ci_txt = f"({_fmt(row['ci_lower'], scale)}, {_fmt(row['ci_upper'], scale)})"
            else:
                ci_txt = "-"
            m_txt = f"{row['m']:g}" if "m" in row else f"r={row['r']:g}"
            lines.append(f"| {m_txt} | {bounds_txt} | {ci_txt} |")
        lines.append("")

    sens = report_dict.get("sensitivity")
    if sens:
        lines += ["## Sensitivity to monotonicity violations", "",
                  f"- bias factor: {sens['bias_factor']:.4g}",
                  f"- estimate: {_fmt(sens['naive_estimate'], scale)}",
                  f"- range: ({_fmt(sens['interval']['lower'], scale)}, "
                  f"{_fmt(sens['interval']['upper'], scale)})", ""]

    diag = report_dict.get("diagnostics")
    if diag:
        lines += ["## Diagnostics", ""]
        for key, value in sorted(diag.items()):
            lines.append(f"- {key}: {value}")
        lines.append("")
    return "\n".join(lines)
