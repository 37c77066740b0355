"""Deduction engine for parallelism of twistor, Killing and *-Killing forms.

The engine works per form class and degree on a Ricci-flat exceptional
holonomy context.  For a bundle E inside the p-forms it combines

  * occurrence bookkeeping of the summands of T (x) E in the adjacent
    form spaces (which twistor operators vanish identically, and which
    are killed by closedness or coclosedness),
  * the integrability factor f with f * nabla*nabla = q(R) for the form
    class at hand,
  * the conformal weights of the Weitzenboeck formula,

and concludes Parallel when the surviving operators carry residuals
f + b_i of one strict sign (after integration over the compact
manifold), or when q(R) is known to vanish on E.  Verdicts are only
ever Parallel or Inconclusive; the engine never claims existence of
non-parallel forms.  Every step carries a citation from the table in
:mod:`holoweitz.citations`, and the compactness and exact-holonomy
hypotheses are recorded on every report.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import citations
from .contexts import HolonomyContext, form_space, qr_citation, qr_trivial
from .errors import ContextNotSupported, NotAFormComponent
from .fmt import fmt_q
from .irreps import Irrep, dimension
from .weitzenboeck import conformal_weights

PARALLEL = "Parallel"
INCONCLUSIVE = "Inconclusive"


class FormClass(enum.Enum):
    TWISTOR = "twistor"
    KILLING = "killing"
    STAR_KILLING = "star-killing"

    @property
    def dual(self) -> "FormClass":
        if self is FormClass.KILLING:
            return FormClass.STAR_KILLING
        if self is FormClass.STAR_KILLING:
            return FormClass.KILLING
        return FormClass.TWISTOR


class KilledBy(enum.Enum):
    TWISTOR_GAP = "TwistorGap"
    CLOSEDNESS = "Closedness"
    COCLOSEDNESS = "Coclosedness"
    NONE = "None"


@dataclass(frozen=True)
class SummandStatus:
    summand: Irrep
    occ_plus: int
    occ_minus: int
    killed_by: KilledBy


@dataclass(frozen=True)
class Survivor:
    summand: Irrep
    b: Fraction
    residual: Fraction | None


@dataclass(frozen=True)
class TraceStep:
    rule: str
    citation: str
    detail: str


@dataclass(frozen=True)
class ComponentVerdict:
    bundle: Irrep
    degree: int
    form_class: FormClass
    statuses: tuple[SummandStatus, ...]
    factor: Fraction | None
    survivors: tuple[Survivor, ...]
    verdict: str
    trace: tuple[TraceStep, ...]


@dataclass(frozen=True)
class DegreeReport:
    context_id: str
    degree: int
    form_class: FormClass
    reductions: tuple[TraceStep, ...]
    components: tuple[ComponentVerdict, ...]
    verdict: str
    hypotheses: tuple[str, ...] = citations.HYPOTHESES


@dataclass(frozen=True)
class TheoremReport:
    context_id: str
    reports: tuple[DegreeReport, ...]
    claims: tuple[tuple[str, int, str], ...]  # (class, degree, verdict)
    expected_parallel: tuple[tuple[str, int], ...]
    matches_expected: bool
    hypotheses: tuple[str, ...] = citations.HYPOTHESES


# claim sets of the two parallelism theorems
EXPECTED_PARALLEL = {
    "g2": tuple(
        sorted(
            [("killing", p) for p in range(1, 7)]
            + [("star-killing", p) for p in range(1, 7)]
            + [("twistor", p) for p in (1, 2, 5, 6)]
        )
    ),
    "spin7": tuple(
        sorted(
            [("killing", p) for p in range(1, 8)]
            + [("star-killing", p) for p in range(1, 8)]
            + [("twistor", p) for p in (1, 2, 6, 7)]
        )
    ),
}


def _require_prover_context(ctx: HolonomyContext) -> None:
    if not ctx.ricci_flat:
        raise ContextNotSupported(
            f"prover rules need a Ricci-flat exceptional holonomy context, not {ctx.id}"
        )


def _step(rule: str, detail: str) -> TraceStep:
    return TraceStep(rule, citations.CITATIONS[rule], detail)


def _wname(irrep: Irrep) -> str:
    return "(" + ",".join(str(c) for c in irrep.highest_weight) + ")"


def vanishing_analysis(
    ctx: HolonomyContext, e: Irrep, p: int, form_class: FormClass
) -> tuple[SummandStatus, ...]:
    """Which twistor operators on E vanish for forms of the given class.

    Occurrence counts of each summand of T (x) E in the adjacent form
    spaces drive three rules: a summand in neither space has an
    identically vanishing operator on any twistor form; closed forms
    (*-Killing) kill operators into summands of the (p+1)-forms; coclosed
    forms (Killing) kill operators into summands of the (p-1)-forms.
    """
    _require_prover_context(ctx)
    if form_space(ctx, p).multiplicity_of(e) == 0:
        raise NotAFormComponent(f"{e} does not occur in the {p}-forms of {ctx.id}")
    formula = conformal_weights(ctx, e)  # also enforces multiplicity-freeness
    plus = form_space(ctx, p + 1)
    minus = form_space(ctx, p - 1)
    statuses = []
    for s in formula.summands:
        occ_plus = plus.multiplicity_of(s.irrep)
        occ_minus = minus.multiplicity_of(s.irrep)
        if occ_plus == 0 and occ_minus == 0:
            killed = KilledBy.TWISTOR_GAP
        elif form_class is FormClass.STAR_KILLING and occ_plus > 0:
            killed = KilledBy.CLOSEDNESS
        elif form_class is FormClass.KILLING and occ_minus > 0:
            killed = KilledBy.COCLOSEDNESS
        else:
            killed = KilledBy.NONE
        statuses.append(SummandStatus(s.irrep, occ_plus, occ_minus, killed))
    return tuple(statuses)


def integrability_factor(form_class: FormClass, p: int, n: int) -> Fraction | None:
    """Factor f with f * nabla*nabla = q(R) for the form class, if any.

    Killing forms in degree p give f = p; *-Killing forms give f = n - p
    by Hodge duality; twistor forms give f = p only in the middle degree
    n = 2p.  Otherwise there is no such identity and None is returned.
    """
    if form_class is FormClass.KILLING:
        return Fraction(p)
    if form_class is FormClass.STAR_KILLING:
        return Fraction(n - p)
    if 2 * p == n:
        return Fraction(p)
    return None


def _factor_rule(form_class: FormClass) -> str:
    if form_class is FormClass.KILLING:
        return "integrability-killing"
    if form_class is FormClass.STAR_KILLING:
        return "integrability-star-killing"
    return "integrability-middle-twistor"


def prove_component(
    ctx: HolonomyContext, e: Irrep, p: int, form_class: FormClass
) -> ComponentVerdict:
    """Parallelism analysis for forms of one class inside one component."""
    _require_prover_context(ctx)
    if form_space(ctx, p).multiplicity_of(e) == 0:
        raise NotAFormComponent(f"{e} does not occur in the {p}-forms of {ctx.id}")

    # registry short-circuit: q(R) = 0 on E, no Weitzenboeck data needed
    if qr_trivial(ctx, e):
        trace = (
            TraceStep(
                "qr-registry",
                qr_citation(ctx, e),
                f"q(R) acts trivially on {_wname(e)}; any twistor form in this "
                "bundle is parallel on a compact manifold",
            ),
        )
        return ComponentVerdict(
            bundle=e,
            degree=p,
            form_class=form_class,
            statuses=(),
            factor=None,
            survivors=(),
            verdict=PARALLEL,
            trace=trace,
        )

    statuses = vanishing_analysis(ctx, e, p, form_class)
    formula = conformal_weights(ctx, e)
    b_of = {s.irrep: s.b for s in formula.summands}
    trace: list[TraceStep] = [
        _step(
            "conformal-weights",
            f"T (x) {_wname(e)} has summands "
            + ", ".join(_wname(st.summand) for st in statuses)
            + "; q(R) = sum(-b_i) T_i*T_i",
        )
    ]

    killed_gap = [i + 1 for i, st in enumerate(statuses) if st.killed_by is KilledBy.TWISTOR_GAP]
    if killed_gap:
        trace.append(
            _step(
                "twistor-gap",
                "T" + ", T".join(str(i) for i in killed_gap) + " vanish on every twistor form",
            )
        )
    killed_closed = [i + 1 for i, st in enumerate(statuses) if st.killed_by is KilledBy.CLOSEDNESS]
    if killed_closed:
        trace.append(
            _step(
                "closedness",
                "du = 0 forces T" + "u = T".join(str(i) for i in killed_closed) + "u = 0",
            )
        )
        trace.append(_step("schur-factorization", "used by the closedness rule"))
    killed_coclosed = [
        i + 1 for i, st in enumerate(statuses) if st.killed_by is KilledBy.COCLOSEDNESS
    ]
    if killed_coclosed:
        trace.append(
            _step(
                "coclosedness",
                "d*u = 0 forces T" + "u = T".join(str(i) for i in killed_coclosed) + "u = 0",
            )
        )
        trace.append(_step("schur-factorization", "used by the coclosedness rule"))

    factor = integrability_factor(form_class, p, ctx.n)
    surviving = [(i, st) for i, st in enumerate(statuses) if st.killed_by is KilledBy.NONE]

    if not surviving:
        trace.append(_step("all-operators-vanish", "no twistor operator survives"))
        survivors: tuple[Survivor, ...] = ()
        verdict = PARALLEL
        factor_out = factor
    elif factor is None:
        survivors = tuple(
            Survivor(st.summand, b_of[st.summand], None) for _, st in surviving
        )
        trace.append(
            _step(
                "no-factor",
                "operators T"
                + ", T".join(str(i + 1) for i, _ in surviving)
                + " survive but no integrability identity applies",
            )
        )
        verdict = INCONCLUSIVE
        factor_out = None
    else:
        trace.append(
            _step(
                _factor_rule(form_class),
                f"{fmt_q(factor)} nabla*nabla u = q(R) u for {form_class.value} "
                f"{p}-forms (n = {ctx.n})",
            )
        )
        survivors = tuple(
            Survivor(st.summand, b_of[st.summand], factor + b_of[st.summand])
            for _, st in surviving
        )
        residuals = [s.residual for s in survivors]
        detail = "0 = " + " + ".join(
            f"({fmt_q(factor)} + ({fmt_q(s.b)})) ||T{i + 1} u||^2"
            for (i, _), s in zip(surviving, survivors)
        )
        if any(r == 0 for r in residuals):
            verdict = INCONCLUSIVE
            trace.append(
                _step("mixed-signs", detail + "; a zero residual forces no vanishing")
            )
        elif all(r > 0 for r in residuals) or all(r < 0 for r in residuals):
            verdict = PARALLEL
            trace.append(
                _step(
                    "sign-argument",
                    detail + "; all residuals of one strict sign, so every "
                    "surviving operator vanishes",
                )
            )
            trace.append(_step("all-operators-vanish", "the form is parallel"))
        else:
            verdict = INCONCLUSIVE
            trace.append(_step("mixed-signs", detail))
        factor_out = factor

    return ComponentVerdict(
        bundle=e,
        degree=p,
        form_class=form_class,
        statuses=statuses,
        factor=factor_out,
        survivors=survivors,
        verdict=verdict,
        trace=tuple(trace),
    )


def prove_degree(ctx: HolonomyContext, p: int, form_class: FormClass) -> DegreeReport:
    """Parallelism analysis for all forms of one class in one degree."""
    _require_prover_context(ctx)
    if not 1 <= p <= ctx.n - 1:
        raise NotAFormComponent(f"degree {p} outside 1..{ctx.n - 1}")

    reductions: list[TraceStep] = []

    # R1: Hodge duality sends twistor p-forms to twistor (n-p)-forms
    if form_class is FormClass.TWISTOR and 2 * p > ctx.n:
        reductions.append(
            _step(
                "hodge-duality",
                f"twistor {p}-forms correspond to twistor {ctx.n - p}-forms",
            )
        )
        delegate = prove_degree(ctx, ctx.n - p, form_class)
        return DegreeReport(
            context_id=ctx.id,
            degree=p,
            form_class=form_class,
            reductions=tuple(reductions) + delegate.reductions,
            components=delegate.components,
            verdict=delegate.verdict,
        )

    # R2: on compact Ricci-flat manifolds twistor 2-forms are coclosed
    effective_class = form_class
    if form_class is FormClass.TWISTOR and p == 2:
        reductions.append(
            _step("twistor-2form-coclosed", "treat twistor 2-forms as Killing 2-forms")
        )
        effective_class = FormClass.KILLING

    space = form_space(ctx, p)
    components_irreps = space.irreps()

    if effective_class in (FormClass.KILLING, FormClass.STAR_KILLING):
        reductions.append(
            _step(
                "holonomy-decomposition",
                f"a {effective_class.value} form is one iff all its components are",
            )
        )
        justified = True
    elif len(components_irreps) == 1:
        reductions.append(
            _step("irreducible-form-space", f"the {p}-forms are irreducible")
        )
        justified = True
    elif 2 * p == ctx.n:
        reductions.append(
            _step(
                "componentwise-middle-twistor",
                "components of a middle-degree twistor form are twistor forms",
            )
        )
        justified = True
    else:
        reductions.append(
            _step(
                "unjustified-split",
                "componentwise analysis below is hypothetical; the overall "
                "verdict stays Inconclusive",
            )
        )
        justified = False

    components = tuple(
        prove_component(ctx, irr, p, effective_class) for irr in components_irreps
    )
    if justified and all(c.verdict == PARALLEL for c in components):
        verdict = PARALLEL
    else:
        verdict = INCONCLUSIVE

    return DegreeReport(
        context_id=ctx.id,
        degree=p,
        form_class=form_class,
        reductions=tuple(reductions),
        components=components,
        verdict=verdict,
    )


def prove_theorems(ctx: HolonomyContext) -> TheoremReport:
    """Run every degree and form class; compare with the theorem claim set."""
    _require_prover_context(ctx)
    reports = []
    claims = []
    for form_class in (FormClass.KILLING, FormClass.STAR_KILLING, FormClass.TWISTOR):
        for p in range(1, ctx.n):
            report = prove_degree(ctx, p, form_class)
            reports.append(report)
            claims.append((form_class.value, p, report.verdict))
    expected = EXPECTED_PARALLEL[ctx.id]
    parallel = tuple(sorted((c, p) for c, p, v in claims if v == PARALLEL))
    return TheoremReport(
        context_id=ctx.id,
        reports=tuple(reports),
        claims=tuple(sorted(claims)),
        expected_parallel=expected,
        matches_expected=parallel == expected,
    )


# --- JSON rendering ---------------------------------------------------------


def component_json(c: ComponentVerdict) -> dict:
    return {
        "weight": list(c.bundle.highest_weight),
        "dim": dimension(c.bundle),
        "statuses": [
            {
                "weight": list(st.summand.highest_weight),
                "occ_plus": st.occ_plus,
                "occ_minus": st.occ_minus,
                "killed_by": st.killed_by.value,
            }
            for st in c.statuses
        ],
        "factor": None if c.factor is None else fmt_q(c.factor),
        "survivors": [
            {
                "weight": list(s.summand.highest_weight),
                "residual": None if s.residual is None else fmt_q(s.residual),
            }
            for s in c.survivors
        ],
        "verdict": c.verdict,
        "trace": [
            {"rule": t.rule, "citation": t.citation, "detail": t.detail} for t in c.trace
        ],
    }


def degree_report_json(r: DegreeReport) -> dict:
    return {
        "context": r.context_id,
        "degree": r.degree,
        "class": r.form_class.value,
        "hypotheses": list(r.hypotheses),
        "reductions": [
            {"rule": t.rule, "citation": t.citation, "detail": t.detail}
            for t in r.reductions
        ],
        "components": [component_json(c) for c in r.components],
        "verdict": r.verdict,
    }


def theorem_report_json(t: TheoremReport) -> dict:
    return {
        "context": t.context_id,
        "hypotheses": list(t.hypotheses),
        "claims": [
            {"class": c, "degree": p, "verdict": v} for c, p, v in t.claims
        ],
        "expected_parallel": [
            {"class": c, "degree": p} for c, p in t.expected_parallel
        ],
        "matches_expected": t.matches_expected,
        "reports": [degree_report_json(r) for r in t.reports],
    }
