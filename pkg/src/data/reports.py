"""
Shared machine-readable report envelope and the human renderings.

Every report serializes as
    {"schema_version": 1, "kind": <kind>, "report": {...}}
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from ..decision.completeness import CompletenessReport, MapSearchReport
from ..errors import BlackSwanError
from ..kernel.checker import CheckReport
from ..kernel.corpus import CorpusReport
from ..semantics.entailment import EntailmentReport


logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

Report = Union[CheckReport, EntailmentReport, CompletenessReport, MapSearchReport, CorpusReport]

REPORT_KINDS = {
    'proof-check': CheckReport,
    'entailment': EntailmentReport,
    'completeness': CompletenessReport,
    'map-search': MapSearchReport,
    'corpus': CorpusReport,
}


class ReportFormatError(BlackSwanError):
    """Text is not a report envelope this version understands."""
    pass


def report_kind(report: Report) -> str:
    for kind, cls in REPORT_KINDS.items():
        if isinstance(report, cls):
            return kind
    raise ReportFormatError(f"Not a report: {type(report).__name__}")


def report_envelope(report: Report) -> Dict[str, Any]:
    return {'schema_version': SCHEMA_VERSION, 'kind': report_kind(report), 'report': report.to_dict()}


def dump_report(report: Report) -> str:
    return json.dumps(report_envelope(report), indent=2)


def load_report(text: str) -> Report:
    """Parse a dumped report back into its dataclass."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ReportFormatError(f"Report is not valid JSON: {e}")
    if not isinstance(data, dict) or data.get('schema_version') != SCHEMA_VERSION:
        raise ReportFormatError(f"Unsupported report schema version: {data.get('schema_version') if isinstance(data, dict) else None}")
    kind = data.get('kind')
    if kind not in REPORT_KINDS:
        raise ReportFormatError(f"Unknown report kind: {kind!r}")
    return REPORT_KINDS[kind].from_dict(data['report'])


def save_report(report: Report, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_report(report) + "\n", encoding="utf-8")
    logger.info(f"Saved {report_kind(report)} report to {path}")
    return path


# ---------------------------------------------------------------------------
# Human renderings

def render_check(report: CheckReport, trace: bool = False) -> str:
    lines: List[str] = []
    name = report.script or "<script>"
    if trace:
        for r in report.lines:
            status = "ok" if r.ok else "FAIL"
            text = f"{r.index:>3}. [{status}] {r.formula} ; {r.justification}"
            if r.instantiation:
                text += "  {" + ", ".join(f"{k} := {v}" for k, v in r.instantiation.items()) + "}"
            if r.reason:
                text += f"  -- {r.reason}"
            lines.append(text)
    else:
        for r in report.lines:
            if not r.ok:
                lines.append(f"line {r.index}: {r.reason}")
    if report.goal_reason:
        lines.append(f"goal: {report.goal_reason}")
    lines.append(f"{name} ({report.theory}, goal {report.goal}): {report.verdict.value}, "
                 f"{report.lines_ok}/{len(report.lines)} lines verified")
    return "\n".join(lines)


def render_entailment(report: EntailmentReport) -> str:
    premises = ", ".join(report.premises) if report.premises else "(no premises)"
    lines = [f"{premises} |= {report.conclusion}  [{report.mode.value}, n <= {report.max_n}]"]
    for t in report.per_size:
        lines.append(f"  n={t.n}: {t.scanned} models, {t.premises_satisfied} satisfy the premises, "
                     f"{t.counterexamples} counterexamples")
    lines.append(f"models scanned: {report.models_scanned}; premises satisfied: {report.premises_satisfied}; "
                 f"conclusion satisfied: {report.conclusion_satisfied}")
    if report.entailed:
        lines.append("entailed: no counterexample found")
    else:
        lines.append(f"NOT entailed: {report.counterexample_count} counterexample(s)")
        for c in report.counterexamples:
            lines.append(f"  #{c.index}: {c.model}")
        hidden = report.counterexample_count - len(report.counterexamples)
        if hidden > 0:
            lines.append(f"  ... {hidden} more not listed")
    return "\n".join(lines)


def _subset(names) -> str:
    return "{" + ", ".join(names) + "}"


def render_completeness(report: CompletenessReport) -> str:
    lines = [
        f"property: {report.property.value}",
        f"events: {', '.join(report.events)}; black swans: {_subset(report.black_swans)}",
        f"actions: {len(report.actions)}, outcomes: {len(report.outcomes)}, "
        f"outcome tables per pair: {report.tables_per_pair}",
        f"pairs separated: {len(report.separators)}/{report.pairs_checked}; unresolved lookups: {report.unresolved}",
    ]
    if report.complete:
        lines.append("verdict: complete")
    else:
        first, second = report.witness
        lines.append(f"verdict: incomplete, witness {_subset(first)} / {_subset(second)}")
        if report.witness_results:
            lines.append(f"  under the file's gamma: {report.witness_results[0]} / {report.witness_results[1]}")
        if report.black_swans and len(report.black_swans) >= 2:
            lines.append(f"note: {report.note}")
    return "\n".join(lines)


def render_map_search(report: MapSearchReport) -> str:
    lines = [
        f"property: {report.property.value}",
        f"decision maps over {report.vector_domain} outcome vectors: {report.tables_total}",
        f"decided by: {report.decided_by}",
    ]
    if report.collision:
        lines.append(f"forced collision: {_subset(report.collision[0])} / {_subset(report.collision[1])} "
                     f"both DIVERGE")
    lines.append(f"complete maps: {report.complete_maps}/{report.tables_total}")
    return "\n".join(lines)


def render_corpus(report: CorpusReport) -> str:
    lines = []
    for e in report.entries:
        status = "accepted" if e.accepted else "REJECTED"
        lines.append(f"{e.name}: {status} ({e.theory}, goal {e.goal}), {e.lines_ok}/{e.lines_total} lines verified")
    if report.mutations_run:
        lines.append(f"mutations: {report.mutations_rejected}/{report.mutations_run} rejected "
                     f"(seed {report.mutation_seed})")
        lines.extend(f"  false accept: {d}" for d in report.false_accepts)
        lines.extend(f"  failed before the mutated line: {d}" for d in report.early_failures)
    lines.append("corpus ok" if report.ok else "corpus FAILED")
    return "\n".join(lines)


def render_report(report: Report, trace: bool = False) -> str:
    kind = report_kind(report)
    if kind == 'proof-check':
        return render_check(report, trace)
    renderers = {
        'entailment': render_entailment,
        'completeness': render_completeness,
        'map-search': render_map_search,
        'corpus': render_corpus,
    }
    return renderers[kind](report)
