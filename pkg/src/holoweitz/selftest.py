"""Golden-corpus regression: recompute everything and diff against fixtures.

The corpus covers the Casimir tables, the dimension tables, all form
space decompositions, the tensor products behind the Weitzenboeck
formulas, the formulas themselves (with discrepancy annotations) and
both theorem reports.  ``bless`` rewrites the fixture file from the
current computation.
"""

from __future__ import annotations

import difflib
import json
from importlib import resources
from pathlib import Path

from .contexts import form_space, make_context
from .decompose import tensor
from .fmt import fmt_q
from .irreps import Irrep, casimir_lambda2, dimension
from .prover import FormClass, prove_component, prove_theorems
from .weitzenboeck import conformal_weights, to_json_dict

GOLDEN_RESOURCE = "fixtures/golden.json"

# bundles of the two Casimir/dimension tables
TABLE_WEIGHTS = {
    "g2": [(1, 0), (0, 1), (2, 0), (1, 1), (3, 0)],
    "spin7": [
        (0, 1, 0),
        (0, 0, 1),
        (2, 0, 0),
        (0, 0, 2),
        (1, 0, 1),
        (0, 1, 1),
        (1, 1, 0),
        (1, 0, 2),
        (2, 0, 1),
        (0, 0, 3),
    ],
}

# bundles carrying a printed Weitzenboeck formula
FORMULA_WEIGHTS = {
    "g2": [(0, 1), (2, 0)],
    "spin7": [(0, 1, 0), (1, 0, 1), (2, 0, 0), (0, 0, 2)],
}


def _wkey(hw) -> str:
    return ",".join(str(c) for c in hw)


def _deco_json(deco) -> list:
    return [
        {"weight": list(irr.highest_weight), "multiplicity": m, "dim": dimension(irr)}
        for irr, m in deco
    ]


def compute_golden() -> dict:
    out: dict = {
        "casimir_tables": {},
        "dimensions": {},
        "form_spaces": {},
        "tensor_products": {},
        "weitzenboeck": {},
        "theorems": {},
    }
    for ctx_id in ("g2", "spin7"):
        ctx = make_context(ctx_id)
        rs = ctx.root_system
        out["casimir_tables"][ctx_id] = {
            _wkey(hw): fmt_q(casimir_lambda2(ctx, Irrep(rs, hw)))
            for hw in TABLE_WEIGHTS[ctx_id]
        }
        out["dimensions"][ctx_id] = {
            _wkey(hw): dimension(Irrep(rs, hw)) for hw in TABLE_WEIGHTS[ctx_id]
        }
        out["form_spaces"][ctx_id] = {
            str(p): _deco_json(form_space(ctx, p)) for p in range(ctx.n + 1)
        }
        out["tensor_products"][ctx_id] = {
            _wkey(hw): _deco_json(tensor(ctx.holonomy_rep, Irrep(rs, hw)))
            for hw in FORMULA_WEIGHTS[ctx_id]
        }
        out["weitzenboeck"][ctx_id] = {
            _wkey(hw): to_json_dict(conformal_weights(ctx, Irrep(rs, hw)))
            for hw in FORMULA_WEIGHTS[ctx_id]
        }
        theorem = prove_theorems(ctx)
        out["theorems"][ctx_id] = {
            "claims": [
                {"class": c, "degree": p, "verdict": v} for c, p, v in theorem.claims
            ],
            "matches_expected": theorem.matches_expected,
        }

    # the one undecided middle-degree case, pinned with its residuals
    s7 = make_context("spin7")
    open_case = prove_component(
        s7, Irrep(s7.root_system, (0, 0, 2)), 4, FormClass.TWISTOR
    )
    out["theorems"]["spin7"]["open_case_l4_35"] = {
        "verdict": open_case.verdict,
        "survivors": [
            {
                "weight": list(s.summand.highest_weight),
                "residual": fmt_q(s.residual),
            }
            for s in open_case.survivors
        ],
    }
    return out


def golden_path() -> Path:
    return Path(str(resources.files("holoweitz").joinpath(GOLDEN_RESOURCE)))


def run_selftest(bless: bool = False, out=print) -> int:
    """Compare the recomputed corpus with the golden fixtures.

    Returns a process exit status: 0 when everything matches (or after
    blessing), 1 on any mismatch or missing fixture file.
    """
    current = json.loads(json.dumps(compute_golden()))
    path = golden_path()
    if bless:
        path.write_text(json.dumps(current, indent=2, sort_keys=True) + "\n")
        out(f"blessed {len(current)} fixture groups -> {path}")
        return 0
    if not path.exists():
        out(f"FAIL missing golden fixture file {path}; run 'selftest --bless'")
        return 1
    stored = json.loads(path.read_text())
    status = 0
    for group in sorted(set(stored) | set(current)):
        if stored.get(group) == current.get(group):
            out(f"ok {group}")
            continue
        status = 1
        out(f"FAIL {group}")
        want = json.dumps(stored.get(group), indent=2, sort_keys=True).splitlines()
        got = json.dumps(current.get(group), indent=2, sort_keys=True).splitlines()
        for line in difflib.unified_diff(want, got, "golden", "computed", lineterm=""):
            out(line)
    return status
