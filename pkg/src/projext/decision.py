"""Three-valued answers for budgeted queries.

A query over exact data always answers ``YES`` or ``NO``.  A query over lazy
reals may give up at a finite precision budget, and then answers
``Unknown(budget)``.  Combination follows strong Kleene logic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

DEFAULT_BUDGET = 64


@dataclass(frozen=True)
class Decision:
    value: str
    budget: Optional[int] = None

    def __post_init__(self):
        if self.value not in ("yes", "no", "unknown"):
            raise ValueError(f"bad decision value {self.value!r}")

    @property
    def yes(self) -> bool:
        return self.value == "yes"

    @property
    def no(self) -> bool:
        return self.value == "no"

    @property
    def unknown(self) -> bool:
        return self.value == "unknown"

    @property
    def determined(self) -> bool:
        return self.value != "unknown"

    def __invert__(self) -> "Decision":
        if self.yes:
            return NO
        if self.no:
            return YES
        return self

    def __and__(self, other: "Decision") -> "Decision":
        return all_of((self, other))

    def __or__(self, other: "Decision") -> "Decision":
        return any_of((self, other))

    def __bool__(self):
        raise TypeError("Decision is three-valued; test .yes / .no / .unknown")

    def __repr__(self):
        if self.unknown:
            return f"Unknown({self.budget})"
        return self.value.capitalize()

    def to_json(self):
        if self.unknown:
            return {"decision": "unknown", "budget": self.budget}
        return {"decision": self.value}


YES = Decision("yes")
NO = Decision("no")


def unknown(budget: int) -> Decision:
    return Decision("unknown", budget)


def of(flag: bool) -> Decision:
    return YES if flag else NO


def _merge_budget(ds):
    budgets = [d.budget for d in ds if d.unknown and d.budget is not None]
    return max(budgets) if budgets else None


def all_of(ds: Iterable[Decision]) -> Decision:
    ds = list(ds)
    if any(d.no for d in ds):
        return NO
    if all(d.yes for d in ds):
        return YES
    return Decision("unknown", _merge_budget(ds))


def any_of(ds: Iterable[Decision]) -> Decision:
    ds = list(ds)
    if any(d.yes for d in ds):
        return YES
    if all(d.no for d in ds):
        return NO
    return Decision("unknown", _merge_budget(ds))


def implies(a: Decision, b: Decision) -> Decision:
    return any_of((~a, b))
