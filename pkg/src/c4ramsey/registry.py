"""Provenance-carrying registry of known Ramsey facts.

File format, one fact per line:

    targets | kind | value | citation | trust

e.g. ``C4,K10 | exact | 36 | [LaLR] | paper``.  Targets are stored under
their canonical key (C4 entries first, rest sorted), and contradictory
lower/upper pairs are rejected at insertion time.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from .targets import TargetList, parse_targets

KINDS = ("exact", "upper", "lower")
TRUST_TAGS = ("paper", "computational", "derived", "user")


@dataclass(frozen=True)
class RamseyFact:
    targets: TargetList
    kind: str  # exact | upper | lower
    value: int
    citation: str = ""
    trust: str = "user"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.trust not in TRUST_TAGS:
            raise ValueError(f"trust must be one of {TRUST_TAGS}, got {self.trust!r}")
        if self.value < 1:
            raise ValueError(f"fact value must be positive, got {self.value}")

    def key(self) -> str:
        return self.targets.key()

    def to_line(self) -> str:
        return f"{self.key()} | {self.kind} | {self.value} | {self.citation} | {self.trust}"

    @staticmethod
    def from_line(line: str) -> "RamseyFact":
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 5:
            raise ValueError(
                f"bad fact line {line!r}; expected 'targets | kind | value | citation | trust'"
            )
        return RamseyFact(
            targets=parse_targets(parts[0]),
            kind=parts[1],
            value=int(parts[2]),
            citation=parts[3],
            trust=parts[4],
        )


class ContradictionError(ValueError):
    pass


class Registry:
    """Best known lower/upper fact per canonical target key."""

    def __init__(self, facts: Iterable[RamseyFact] = ()):
        self._lower: dict[str, RamseyFact] = {}
        self._upper: dict[str, RamseyFact] = {}
        for f in facts:
            self.add(f)

    def add(self, fact: RamseyFact) -> None:
        key = fact.key()
        as_lower = fact.kind in ("exact", "lower")
        as_upper = fact.kind in ("exact", "upper")
        if as_lower:
            up = self._upper.get(key)
            if up is not None and fact.value > up.value:
                raise ContradictionError(
                    f"lower bound {fact.value} for {key} exceeds upper bound {up.value}"
                )
        if as_upper:
            lo = self._lower.get(key)
            if lo is not None and lo.value > fact.value:
                raise ContradictionError(
                    f"upper bound {fact.value} for {key} is below lower bound {lo.value}"
                )
        if as_lower:
            cur = self._lower.get(key)
            if cur is None or fact.value > cur.value or fact.kind == "exact":
                self._lower[key] = fact
        if as_upper:
            cur = self._upper.get(key)
            if cur is None or fact.value < cur.value or fact.kind == "exact":
                self._upper[key] = fact

    def best_upper(self, targets: TargetList) -> Optional[RamseyFact]:
        return self._upper.get(targets.key())

    def best_lower(self, targets: TargetList) -> Optional[RamseyFact]:
        return self._lower.get(targets.key())

    def exact(self, targets: TargetList) -> Optional[RamseyFact]:
        f = self._upper.get(targets.key())
        return f if f is not None and f.kind == "exact" else None

    def facts(self) -> list[RamseyFact]:
        seen = []
        for table in (self._upper, self._lower):
            for f in table.values():
                if f not in seen:
                    seen.append(f)
        return sorted(seen, key=lambda f: (f.key(), f.kind))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(render_registry(self))

    def __len__(self) -> int:
        return len(self.facts())


def render_registry(reg: Registry) -> str:
    lines = ["# targets | kind | value | citation | trust"]
    lines += [f.to_line() for f in reg.facts()]
    return "\n".join(lines) + "\n"


def parse_registry(text: str) -> Registry:
    reg = Registry()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            reg.add(RamseyFact.from_line(line))
    return reg


def load_registry(path: str | Path) -> Registry:
    return parse_registry(Path(path).read_text())


def seed_registry() -> Registry:
    """The registry of cited base facts shipped with the package."""
    text = resources.files("c4ramsey").joinpath("data/seeds.txt").read_text()
    return parse_registry(text)
