# structured result document (JSON)
#
# {
#   "schema": "qaoa-maxcut/result", "version": 1,
#   "config": {...RunConfig...},
#   "graph": {"n_vertices": 4, "edges": [[0, 1], ...]},
#   "seed": 1234,
#   "initial_params": {"gammas": [...], "betas": [...]},
#   "trace": [{"i", "a", "c", "f_plus", "f_minus", "gradient", "gammas", "betas"}, ...],
#   "final_params": {"gammas": [...], "betas": [...]},
#   "final_expectation": 3.51,
#   "best": {"bitstring": "0101", "score": 4},
#   "brute_force": {"max_score": 4, "argmax": ["0101", "1010"]} | null,
#   "wall_time_s": 1.93
# }
import dataclasses
import json
from typing import Any, Dict, FrozenSet, Optional, Tuple

from cli.config import RunConfig
from core.models import Graph, QaoaParams, SpsaTrace
from utils.errors import ResultFileError

SCHEMA = "qaoa-maxcut/result"
VERSION = 1


def _params(params: QaoaParams) -> Dict[str, Any]:
    return {"gammas": list(params.gammas), "betas": list(params.betas)}


def build_result_document(
    config: RunConfig,
    graph: Graph,
    trace: SpsaTrace,
    brute: Optional[Tuple[int, FrozenSet[str]]],
    wall_time_s: float,
) -> Dict[str, Any]:
    return {
        "schema": SCHEMA,
        "version": VERSION,
        "config": dataclasses.asdict(config),
        "graph": {
            "n_vertices": graph.n_vertices,
            "edges": [list(e) for e in graph.edges],
        },
        "seed": trace.seed,
        "initial_params": _params(trace.initial_params),
        "trace": [
            {
                "i": r.index,
                "a": r.a,
                "c": r.c,
                "f_plus": r.f_plus,
                "f_minus": r.f_minus,
                "gradient": list(r.gradient),
                **_params(r.params),
            }
            for r in trace.records
        ],
        "final_params": _params(trace.final_params),
        "final_expectation": trace.final_value,
        "best": {"bitstring": trace.best_bitstring, "score": trace.best_score},
        "brute_force": (
            None
            if brute is None
            else {"max_score": brute[0], "argmax": sorted(brute[1])}
        ),
        "wall_time_s": wall_time_s,
    }


def write_result(path: str, document: Dict[str, Any]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f, indent=2)
        f.write("\n")


def read_result(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise ResultFileError(f"cannot read result file {path}: {exc}") from exc
    if not isinstance(document, dict) or document.get("schema") != SCHEMA:
        raise ResultFileError(f"{path} is not a {SCHEMA} document")
    if document.get("version") != VERSION:
        raise ResultFileError(
            f"{path} has version {document.get('version')}, expected {VERSION}"
        )
    return document
