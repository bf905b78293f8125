"""Probabilistic structured argumentation for cyber attribution.

Exact rationals come back from the native core as strings ("0.9", "1/3") and
are turned into :class:`fractions.Fraction` here.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

try:
    from . import _inca
except ImportError:  # in-tree build: the module sits next to the package
    import _inca

Error = _inca.Error
ParseError = _inca.ParseError
GroundednessError = _inca.GroundednessError
CapacityError = _inca.CapacityError
InconsistentKBError = _inca.InconsistentKBError
InconsistentEvidenceError = _inca.InconsistentEvidenceError
DistributionError = _inca.DistributionError
SortError = _inca.SortError

__all__ = [
    "Interval",
    "KnowledgeBase",
    "run_cli",
    "Error",
    "ParseError",
    "GroundednessError",
    "CapacityError",
    "InconsistentKBError",
    "InconsistentEvidenceError",
    "DistributionError",
    "SortError",
]


@dataclass(frozen=True)
class Interval:
    lower: Fraction
    upper: Fraction

    @property
    def p(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def eps(self) -> Fraction:
        return (self.upper - self.lower) / 2

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper

    def __str__(self) -> str:
        return f"{_text(self.p)} +- {_text(self.eps)}"

    @classmethod
    def from_json(cls, data: dict) -> "Interval":
        return cls(Fraction(data["lower"]), Fraction(data["upper"]))


def _text(value: Fraction) -> str:
    """Same rendering as the native core: terminating decimals or num/den."""
    if value.denominator == 1:
        return str(value.numerator)
    d = value.denominator
    for prime in (2, 5):
        while d % prime == 0:
            d //= prime
    if d != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = 0
    while (value * 10**digits).denominator != 1:
        digits += 1
    sign = "-" if value < 0 else ""
    scaled = str(abs(value.numerator) * 10**digits // value.denominator).rjust(digits + 1, "0")
    return f"{sign}{scaled[:-digits]}.{scaled[-digits:]}"


def _worlds(text: str) -> list[frozenset[str]]:
    return [frozenset(w) for w in json.loads(text)]


class KnowledgeBase:
    """A parsed and grounded knowledge base ready for queries."""

    def __init__(self, native: "_inca.Framework"):
        self._fw = native

    @classmethod
    def load(cls, path: str | os.PathLike, *, poss: str = "derivable", max_atoms: int = 20):
        return cls(_inca.Framework.load(os.fspath(path), poss, max_atoms))

    @classmethod
    def from_text(cls, text: str, *, poss: str = "derivable", max_atoms: int = 20):
        return cls(_inca.Framework.from_text(text, poss, max_atoms))

    @property
    def consistent(self) -> bool:
        return self._fw.consistent()

    def worlds(self) -> list[frozenset[str]]:
        return _worlds(self._fw.worlds())

    def entail(self, formula: str) -> Interval:
        return Interval.from_json(json.loads(self._fw.entail(formula)))

    def bounds(self, literal: str) -> Interval:
        return Interval.from_json(json.loads(self._fw.bounds(literal)))

    def nec(self, literal: str) -> list[frozenset[str]]:
        return _worlds(self._fw.nec(literal))

    def poss(self, literal: str) -> list[frozenset[str]]:
        return _worlds(self._fw.poss(literal))

    def warrant(self, literal: str, world: Optional[Iterable[str]] = None):
        """Status name without a world, otherwise whether `world` warrants it."""
        if world is None:
            return self._fw.warrant(literal)
        return self._fw.warrants_in(literal, sorted(world))

    def arguments(self, literal: Optional[str] = None) -> list[dict]:
        return json.loads(self._fw.arguments(literal))

    def explain(self, literal: str, world: Iterable[str]) -> list[dict]:
        return json.loads(self._fw.explain(literal, sorted(world)))

    def attribute(
        self,
        operation: str,
        suspects: Sequence[str],
        evidence: Sequence[str] = (),
        order: str = "midpoint",
    ) -> dict:
        data = json.loads(self._fw.attribute(operation, list(suspects), list(evidence), order))
        data["perSuspect"] = {
            actor: Interval.from_json(iv) for actor, iv in data["perSuspect"].items()
        }
        return data


def run_cli(*args: str) -> tuple[int, str, str]:
    """Runs `inca <args>` in-process and returns (exit code, stdout, stderr)."""
    return _inca.run_cli(list(args))
