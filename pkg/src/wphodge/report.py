"""Certificate and search-report documents: construction, canonical JSON, markdown."""

from __future__ import annotations

import json
import os
import tempfile
import time
from dataclasses import asdict
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import __version__
from .exactla import PencilRankCertificate, RationalMatrix
from .hodge.geodesic import non_geodesy_certificate
from .hodge.geometry import domain_geometry
from .hodge.period import ConsistencyError, check_rank_bound, period_differential
from .hodge.profile import hodge_numbers
from .hodge.search import SearchReport
from .jacring import JacobianRingModel, jacobian_ring
from .polyalg import WeightedPolynomial, render_monomial

SCHEMA_VERSION = 1


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, RationalMatrix):
        return x.render()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def canonical_json(doc: dict) -> str:
    return json.dumps(_jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_schema() -> dict:
    text = resources.files("wphodge").joinpath("schema/certificate.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def pencil_summary(cert: PencilRankCertificate) -> dict:
    return {
        "generic_rank": cert.generic_rank,
        "min_rank": cert.min_rank,
        "mode": cert.mode,
        "seed": cert.seed,
        "drop_points": [{"form": list(d.form), "form_text": d.render(), "rank": d.rank}
                        for d in cert.drop_points],
        "candidate_forms": [list(f) for f in cert.candidate_forms],
    }


def build_certificate(
    f: WeightedPolynomial,
    poly_text: str,
    command: str = "analyze",
    mode: str = "exact",
    seed: int = 0,
    include_matrices: bool = False,
    timing: bool = False,
    model: JacobianRingModel | None = None,
) -> dict:
    """Run ring -> Hodge numbers -> geometry -> period differential -> certificate.

    Raises NotQuasiSmooth for singular input and ConsistencyError when a
    computed invariant breaks the contact-geometry bounds.
    """
    ws = f.ws
    t0 = time.perf_counter()
    model = model or jacobian_ring(f)
    t_ring = time.perf_counter()
    profile = hodge_numbers(ws, model)
    doc: dict = {
        "kind": "certificate",
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "tool": {"name": "wphodge", "version": __version__},
        "input": {
            "weights": list(ws.weights),
            "degree": ws.degree,
            "polynomial": poly_text,
            "mode": mode,
            "seed": seed,
        },
        "hodge": {
            "h20": profile.h20,
            "h11_prim": profile.h11_prim,
            "h02": profile.h02,
            "source_degrees": list(profile.source_degrees),
            "symmetric": profile.symmetric,
        },
    }
    anomalies = []
    if not profile.symmetric:
        anomalies.append(f"h20={profile.h20} differs from h02={profile.h02}")
    if not model.socle_is_simple:
        anomalies.append("top graded piece of the Jacobian ring is not one-dimensional")
    if command != "certify":
        doc["jacobian_ring"] = {
            "groebner_basis": [g.render() for g in model.gb.generators],
            "socle_degree": model.socle_degree,
            "socle_monomial": render_monomial(model.socle_monomial) if model.socle_monomial else None,
            "socle_simple": model.socle_is_simple,
            "band": model.band,
            "hilbert": model.hilbert_vector(),
        }
    geometry = None
    if profile.h20 >= 1 and profile.h11_prim >= 1:
        geometry = domain_geometry(profile.h20, profile.h11_prim)
        doc["domain_geometry"] = asdict(geometry)
    else:
        doc["domain_geometry"] = None

    report = None
    if profile.h20 >= 1 and model.socle_degree is not None:
        report = period_differential(model, mode=mode, seed=seed)
        if geometry is not None:
            check_rank_bound(report, geometry)
        pd = {
            "shape": [report.matrix_m.rows, report.matrix_m.cols],
            "rank_m": report.rank_m,
            "tangent_dim": report.tangent_dim,
            "injective": report.rank_m == report.tangent_dim,
        }
        if report.pencil is not None:
            if report.isotropy_ok is False:
                raise ConsistencyError("image of the period differential is not isotropic")
            pd.update({
                "rank_A": report.rank_A,
                "rank_B": report.rank_B,
                "span_rank": report.span_rank,
                "isotropy_ok": report.isotropy_ok,
                "pencil": pencil_summary(report.pencil),
            })
        if include_matrices:
            pd["matrices"] = {"matrix_m": report.matrix_m}
            if report.A is not None:
                pd["matrices"].update({"A": report.A, "B": report.B})
        doc["period_differential"] = pd
    else:
        doc["period_differential"] = None

    if report is not None and report.pencil is not None and geometry is not None and geometry.is_contact:
        ng = non_geodesy_certificate(report, geometry)
        doc["non_geodesy"] = {
            "min_wv_dim": ng.min_wv_dim,
            "threshold": ng.threshold,
            "verdict": ng.verdict,
            "span_full": ng.span_full,
            "mode": ng.mode,
            "maximal": report.rank_m == geometry.max_integral_dim,
        }
    else:
        doc["non_geodesy"] = None
    doc["anomalies"] = anomalies
    if timing:
        t_end = time.perf_counter()
        doc["timing"] = {"ring_seconds": round(t_ring - t0, 6), "total_seconds": round(t_end - t0, 6)}
    return doc


def search_document(report: SearchReport) -> dict:
    return {
        "kind": "search_report",
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "wphodge", "version": __version__},
        "input": {
            "max_weights": list(report.max_weights),
            "min_degree": report.min_degree,
            "max_degree": report.max_degree,
            "mode": report.mode,
            "seed": report.seed,
        },
        "rows": [asdict(r) for r in report.rows],
    }


# -- markdown ------------------------------------------------------------------


def _cell(v) -> str:
    v = _jsonable(v)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "(" + ", ".join(_cell(x) for x in v) + ")" if v else "-"
    if isinstance(v, dict):
        return "; ".join(f"{k}={_cell(x)}" for k, x in sorted(v.items()))
    return str(v)


def _kv_table(section: dict) -> list:
    lines = ["| field | value |", "|---|---|"]
    for k in sorted(section):
        lines.append(f"| {k} | {_cell(section[k])} |")
    return lines


SEARCH_COLUMNS = (
    "weights", "degree", "status", "hodge", "dim_domain", "dim_horizontal", "tangent_dim",
    "rank_m", "pencil_min_rank", "span_rank", "non_geodesic", "maximal",
)


def to_markdown(doc: dict) -> str:
    doc = _jsonable(doc)
    if doc.get("kind") == "search_report":
        inp = doc["input"]
        lines = [
            "# Search report",
            "",
            f"weights <= {_cell(inp['max_weights'])}, degrees {inp['min_degree']}..{inp['max_degree']}, "
            f"pencil mode {inp['mode']}, seed {inp['seed']}",
            "",
            "| " + " | ".join(SEARCH_COLUMNS) + " |",
            "|" + "---|" * len(SEARCH_COLUMNS),
        ]
        for row in doc["rows"]:
            lines.append("| " + " | ".join(_cell(row.get(c)) for c in SEARCH_COLUMNS) + " |")
        anomalies = [(r["weights"], r["degree"], a) for r in doc["rows"] for a in r.get("anomalies", [])]
        if anomalies:
            lines += ["", "## Anomalies", ""]
            lines += [f"- {_cell(w)} d={d}: {a}" for w, d, a in anomalies]
        return "\n".join(lines) + "\n"

    inp = doc["input"]
    lines = [
        f"# Certificate ({doc['command']})",
        "",
        f"weights {_cell(inp['weights'])}, degree {inp['degree']}, mode {inp['mode']}, seed {inp['seed']}",
        "",
        f"f = {inp['polynomial']}",
    ]
    for name in ("hodge", "jacobian_ring", "domain_geometry", "period_differential", "non_geodesy", "timing"):
        section = doc.get(name)
        if section is None:
            continue
        section = dict(section)
        lines += ["", f"## {name}", ""]
        matrices = section.pop("matrices", None)
        pencil = section.pop("pencil", None)
        lines += _kv_table(section)
        if pencil is not None:
            lines += ["", "### pencil", ""] + _kv_table(pencil)
        if matrices is not None:
            for mname in sorted(matrices):
                lines += ["", f"### {mname}", "", "```"]
                lines += [" ".join(r) for r in matrices[mname]]
                lines += ["```"]
    if doc.get("anomalies"):
        lines += ["", "## anomalies", ""] + [f"- {a}" for a in doc["anomalies"]]
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(doc)
    if fmt == "markdown":
        return to_markdown(doc)
    raise ValueError(f"unknown format {fmt!r}")


def write_atomic(path: str | os.PathLike, text: str):
    """Write via a temporary sibling and rename, so readers never see partial files."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
