"""Machine-readable reports.

Key order is fixed and every rational is a ``"p/q"`` string (integers as
``"p"``), so serialised reports compare byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from coxco.analyze import CoherenceReport
from coxco.classify import FinitenessVerdict
from coxco.coxcore import CoxeterSystem, GeneratorSubset, format_order
from coxco.curvature import CurvatureReport
from coxco.smallcancel.pieces import Certificate, PieceReport, Presentation
from coxco.smallcancel.words import word_str

SCHEMA_VERSION = "1.0"


def q(x: Fraction | int | None) -> str | None:
    return None if x is None else str(Fraction(x))


def subset(s: GeneratorSubset | None) -> list[int] | None:
    return None if s is None else list(s.members)


def finiteness_doc(v: FinitenessVerdict) -> dict:
    return {
        "finite": v.finite,
        "components": [str(t) for t in v.components],
        "witness": subset(v.witness),
    }


def coherence_doc(rep: CoherenceReport) -> dict:
    v = rep.verdict
    return {
        "verdict": v.kind,
        "witness": subset(v.witness),
        "witness_size": None if v.witness is None else len(v.witness),
        "witness_chi": q(v.witness_chi),
        "reason": v.reason,
        "group_infinite": rep.group_infinite,
        "l2_profile": None if rep.l2_profile is None else [q(b) for b in rep.l2_profile],
        "equivalences_note": rep.equivalences_note,
    }


def curvature_doc(cr: CurvatureReport) -> dict:
    return {
        "face_curvatures": [q(k) for k in cr.face_curvatures],
        "vertex_curvatures": [q(k) for k in cr.vertex_curvatures],
        "total": q(cr.total),
        "complex_chi": cr.complex_chi,
        "gauss_bonnet": cr.total == 2 * cr.complex_chi,
    }


def analyze_document(sys: CoxeterSystem, rep: CoherenceReport, *, convention: str,
                     witnesses: str, curvature: CurvatureReport | None = None,
                     seconds: float | None = None) -> dict:
    td = rep.two_dimensional
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "rank": sys.rank,
            "orders": [[format_order(m) for m in row] for row in sys.orders],
        },
        "two_dimensional": {
            "two_dimensional": td.two_dimensional,
            "violating_triple": None if td.violating_triple is None else list(td.violating_triple),
            "violating_sum": q(td.violating_sum),
        },
        "chi": q(rep.chi),
        "finiteness": finiteness_doc(rep.finiteness),
        "coherence": coherence_doc(rep),
        "npsc": {
            "convention": convention,
            "holds": rep.npsc.holds,
            "witness": subset(rep.npsc.witness),
            "witness_chi": q(rep.npsc.witness_chi),
        },
        "witness_policy": witnesses,
        "curvature": None if curvature is None else curvature_doc(curvature),
        "timing": None if seconds is None else {"seconds": round(seconds, 6)},
    }


def sc_document(p: Presentation, pieces: PieceReport, cert: Certificate,
                lam: Fraction | None = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "generators": p.generator_count,
        "relators": [word_str(r) for r in p.relators],
        "pieces": [
            {
                "length": rp.length,
                "max_piece_length": rp.max_piece_length,
                "ratio": q(rp.ratio),
                "witness": None if rp.witness is None else [word_str(w) for w in rp.witness],
                "collision": rp.collision,
            }
            for rp in pieces.relators
        ],
        "c_prime_sixth": pieces.c_prime_sixth,
        "certificate": {
            "certified": cert.certified,
            "chi": cert.chi,
            "reason": cert.reason,
            "facts": dict(cert.facts),
        },
    }
    if lam is not None:
        doc["lambda"] = q(lam)
        doc["small_cancellation"] = pieces.satisfies(lam)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def load_schema() -> dict:
    return json.loads(resources.files("coxco").joinpath("report.schema.json").read_text())


def _fmt_subset(members) -> str:
    return "{" + ",".join(map(str, members)) + "}" if members is not None else "-"


def analyze_text(doc: dict) -> str:
    td, coh, npsc = doc["two_dimensional"], doc["coherence"], doc["npsc"]
    lines = [f"rank: {doc['input']['rank']}"]
    if td["two_dimensional"]:
        lines.append("two_dimensional: true")
    else:
        lines.append(f"two_dimensional: false (triple {td['violating_triple']} "
                     f"sums to {td['violating_sum']} > 1)")
    lines.append(f"chi: {doc['chi']}")
    fin = doc["finiteness"]
    if fin["finite"]:
        lines.append("finite: true (" + (" x ".join(fin["components"]) or "trivial") + ")")
    else:
        lines.append(f"finite: false (infinite component {_fmt_subset(fin['witness'])})")
    verdict = coh["verdict"]
    if verdict == "incoherent":
        lines.append(f"verdict: incoherent (witness {_fmt_subset(coh['witness'])}, "
                     f"chi {coh['witness_chi']})")
    elif verdict == "not_applicable":
        lines.append(f"verdict: not_applicable ({coh['reason']})")
    else:
        lines.append("verdict: coherent")
    if coh["l2_profile"] is not None:
        lines.append("l2_betti: (" + ", ".join(coh["l2_profile"]) + ")")
    if coh["equivalences_note"]:
        lines.append(f"note: {coh['equivalences_note']}")
    if npsc["holds"]:
        lines.append(f"npsc_criterion: holds ({npsc['convention']} graph)")
    else:
        lines.append(f"npsc_criterion: fails ({npsc['convention']} graph, witness "
                     f"{_fmt_subset(npsc['witness'])}, chi {npsc['witness_chi']})")
    if doc["timing"] is not None:
        lines.append(f"seconds: {doc['timing']['seconds']}")
    return "\n".join(lines) + "\n"


def sc_text(doc: dict) -> str:
    lines = [f"generators: {doc['generators']}", f"relators: {len(doc['relators'])}"]
    for k, (r, pc) in enumerate(zip(doc["relators"], doc["pieces"])):
        extra = " (collision)" if pc["collision"] else ""
        lines.append(f"relator {k}: {r} length {pc['length']} max_piece {pc['max_piece_length']} "
                     f"ratio {pc['ratio']}{extra}")
    lines.append(f"c_prime_sixth: {str(doc['c_prime_sixth']).lower()}")
    if "lambda" in doc:
        lines.append(f"small_cancellation(lambda={doc['lambda']}): "
                     f"{str(doc['small_cancellation']).lower()}")
    cert = doc["certificate"]
    if cert["certified"]:
        lines.append(f"certificate: certified incoherent (chi = {cert['chi']})")
    else:
        lines.append(f"certificate: inconclusive ({cert['reason']})")
    return "\n".join(lines) + "\n"


def curvature_text(doc: dict) -> str:
    lines = [f"complex_chi: {doc['complex_chi']}"]
    lines += [f"face {f}: kappa {k}pi" for f, k in enumerate(doc["face_curvatures"])]
    lines += [f"vertex {y}: kappa {k}pi" for y, k in enumerate(doc["vertex_curvatures"])]
    lines.append(f"total: {doc['total']}pi")
    lines.append(f"gauss_bonnet: {str(doc['gauss_bonnet']).lower()}")
    return "\n".join(lines) + "\n"
