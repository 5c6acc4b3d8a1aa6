"""Per-semigroup analysis bundles and their text/JSON renderings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .classify import GotoReport, classify
from .constructions import ConstructionReport, chain_report
from .errors import GorensteinError, NotThreeGeneratedError
from .herzog import HerzogData, emit_matrix, goto_rank_via_theorem, herzog_data
from .hilbert import HilbertData, SallyFiltration, canonical_ideal_in_R, hilbert_data, sally_filtration
from .semigroup import NumericalSemigroup


@dataclass
class AnalysisBundle:
    goto: GotoReport
    hilbert: HilbertData
    lift: int
    sally: Optional[SallyFiltration] = None
    herzog: Optional[HerzogData] = None
    herzog_rank: Optional[int] = None
    matrix: Optional[str] = None
    constructions: List[ConstructionReport] = field(default_factory=list)

    @property
    def semigroup(self) -> NumericalSemigroup:
        return self.goto.semigroup

    def inconsistencies(self) -> List[str]:
        """Cross-report disagreements; empty when every sub-report agrees on the rank."""
        problems = []
        rank = self.goto.goto_rank
        if self.sally is not None and self.sally.rank != rank:
            problems.append(f"Sally rank {self.sally.rank} != Goto rank {rank}")
        if self.herzog is not None and self.herzog_rank != rank:
            problems.append(f"closed-form rank {self.herzog_rank} != Goto rank {rank}")
        for rep in self.constructions:
            if rep.kind == "blowup_chain" and rep.derived_rank != rank:
                problems.append(f"chain head rank {rep.derived_rank} != Goto rank {rank}")
        if self.goto.e1 is not None and self.goto.e1 != self.hilbert.e1:
            problems.append(f"fitted e1 {self.hilbert.e1} != n + len(K/R) = {self.goto.e1}")
        return problems

    def to_dict(self) -> Dict[str, object]:
        sally = {"rank": self.goto.goto_rank, "t": None, "s": None}
        if self.sally is not None:
            sally.update(self.sally.to_dict())
        sally.update(self.hilbert.to_dict())
        sally["a"] = self.lift
        return {
            "goto": self.goto.to_dict(),
            "sally": sally,
            "herzog": None if self.herzog is None else dict(self.herzog.to_dict(), closed_form_rank=self.herzog_rank),
            "constructions": [rep.to_dict() for rep in self.constructions],
        }


def analyze(sg: NumericalSemigroup) -> AnalysisBundle:
    rep = classify(sg)
    _, lift = canonical_ideal_in_R(sg)
    bundle = AnalysisBundle(goto=rep, hilbert=hilbert_data(sg), lift=lift)
    if rep.is_goto and rep.goto_rank:
        bundle.sally = sally_filtration(sg)
    try:
        bundle.herzog = herzog_data(sg)
        bundle.herzog_rank = goto_rank_via_theorem(sg)
        bundle.matrix = emit_matrix(sg)
    except (GorensteinError, NotThreeGeneratedError):
        pass
    bundle.constructions.append(chain_report(sg))
    return bundle


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "{" + ", ".join(map(str, value)) + "}"
    return str(value)


def table(rows: Sequence[Tuple[str, object]], width: int = 0) -> str:
    width = width or max(len(label) for label, _ in rows)
    return "\n".join(f"{label:<{width}}  {_fmt(value)}" for label, value in rows)


def render(bundle: AnalysisBundle) -> str:
    rep = bundle.goto
    sg = rep.semigroup
    rows = [
        ("semigroup", str(sg)),
        ("multiplicity e", sg.multiplicity),
        ("embedding dim v", sg.embedding_dim),
        ("frobenius f", sg.frobenius),
        ("genus g", sg.genus),
        ("PF", list(sg.pf)),
        ("type r", sg.cm_type),
        ("K^2 = K^3", rep.is_goto),
        ("Goto rank n", rep.goto_rank),
        ("gorenstein", rep.gorenstein),
        ("almost gorenstein", rep.almost_gorenstein),
        ("2-AGL", rep.two_agl),
        ("GGL", "undecided" if rep.ggl is None else rep.ggl),
        ("len(K/R)", rep.len_K_over_R),
        ("len(R/c)", rep.len_R_over_c),
        ("mu(K^2/K)", rep.mu_K2_over_K),
        ("v(R/c)", rep.v_R_over_c),
        ("R/c gorenstein", rep.rc_gorenstein),
        ("K/R summands", rep.decomposition),
        ("min multiplicity", rep.min_mult),
        ("reduction number", rep.reduction_number),
        ("a (I = a + K)", bundle.lift),
        ("e0", bundle.hilbert.e0),
        ("e1", bundle.hilbert.e1),
    ]
    if bundle.sally is not None:
        rows += [("Sally t", bundle.sally.socle_degree), ("Sally s", list(bundle.sally.sally_counts))]
    chain = next((item for item in bundle.constructions if item.kind == "blowup_chain"), None)
    if chain is not None:
        rows.append(("arf", chain.rule == "arf"))
    text = table(rows)
    if bundle.matrix is not None:
        text += "\n\nHerzog matrix (closed-form rank " + _fmt(bundle.herzog_rank) + ")\n" + bundle.matrix
    problems = bundle.inconsistencies()
    if problems:
        text += "\n\nINCONSISTENT: " + "; ".join(problems)
    return text


def render_chain(rep: ConstructionReport) -> str:
    lines = [f"{'step':>4}  {'semigroup':<24} {'e':>3} {'v':>3} {'rank':>5}  min-mult"]
    for i, (step, rank) in enumerate(rep.chain or []):
        lines.append(
            f"{i:>4}  {str(step):<24} {step.multiplicity:>3} {step.embedding_dim:>3} {_fmt(rank):>5}  {_fmt(step.has_minimal_multiplicity())}"
        )
    lines.append("arf: " + ("yes" if rep.rule == "arf" else "no"))
    return "\n".join(lines)
