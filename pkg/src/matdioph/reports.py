"""Structured verification outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .bigmatrix import BigMat

RESIDUAL_PRINT_LIMIT = 64


@dataclass(frozen=True)
class VerifyReport:
    claim: dict[str, Any]
    holds: bool
    residual: BigMat | None = None
    timing_ms: float = 0.0

    def __post_init__(self):
        if self.holds and self.residual is not None:
            raise ValueError("a holding claim carries no residual")
        if not self.holds and self.residual is None:
            raise ValueError("a failing claim must carry its residual")

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "claim": self.claim,
            "holds": self.holds,
            "residual": None if self.residual is None else self.residual.to_json_rows(),
        }
        if timing:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out

    def summary(self) -> str:
        verdict = "HOLDS" if self.holds else "FAILS"
        lines = [f"{verdict}: {self.claim.get('statement', '')}".rstrip(": ")]
        if self.residual is not None:
            entries = self.residual.entries()
            shown = entries[:RESIDUAL_PRINT_LIMIT]
            lines.append(f"residual ({self.residual.dim}x{self.residual.dim}): {shown}")
            if len(entries) > len(shown):
                lines.append(f"... {len(entries) - len(shown)} more entries (see --json)")
        return "\n".join(lines)


@dataclass(frozen=True)
class LemmaReport:
    """Divisibility of ``(x+y)**m - x**m - y**m`` by powers of ``x**2+x*y+y**2``.

    ``paper_claim_eq1`` is set only for m = 1 mod 6 (does K divide T_m) and
    ``paper_claim_eq2`` only for m = 5 mod 6 (does K**2 divide T_m); both are
    None for other residues. ``quotient_degrees[j-1]`` is the degree of
    ``T_m / K**j`` for each exact j.
    """

    m: int
    computed_multiplicity: int
    paper_claim_eq1: bool | None
    paper_claim_eq2: bool | None
    quotient_degrees: list[int] = field(default_factory=list)

    @property
    def residue(self) -> int:
        return self.m % 6

    @property
    def discrepancy(self) -> bool:
        return self.paper_claim_eq1 is False or self.paper_claim_eq2 is False

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "residue_mod_6": self.residue,
            "computed_multiplicity": self.computed_multiplicity,
            "paper_claim_eq1": self.paper_claim_eq1,
            "paper_claim_eq2": self.paper_claim_eq2,
            "quotient_degrees": list(self.quotient_degrees),
        }
