from dataclasses import dataclass, field
from typing import Any, List, Optional

from .errors import LawViolation


@dataclass(frozen=True)
class Exactness:
    """Whether an enumeration is complete or was cut off at a degree bound."""

    truncated_at: Optional[int] = None

    @property
    def exact(self):
        return self.truncated_at is None

    @classmethod
    def truncated(cls, bound):
        return cls(truncated_at=bound)

    def meet(self, other):
        """Exact only if both are; otherwise truncated at the smaller bound."""
        if self.exact:
            return other
        if other.exact:
            return self
        return Exactness(min(self.truncated_at, other.truncated_at))

    def __str__(self):
        return "exact" if self.exact else f"truncated@{self.truncated_at}"


EXACT = Exactness()


def meet_all(exactnesses):
    result = EXACT
    for e in exactnesses:
        result = result.meet(e)
    return result


@dataclass(frozen=True)
class EnumResult:
    items: tuple
    exactness: Exactness = EXACT

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


@dataclass(frozen=True)
class Violation:
    law: str
    where: Any
    detail: str = ""

    def __str__(self):
        return f"{self.law} at {self.where}: {self.detail}"


@dataclass
class Report:
    """Result of a law check.

    Args:
        title (str): what was checked
        bound (int, optional): degree bound the check ran at
        exactness (Exactness): completeness of the checked data
    """

    title: str
    bound: Optional[int] = None
    exactness: Exactness = EXACT
    violations: List[Violation] = field(default_factory=list)
    children: List["Report"] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self):
        return not self.violations and all(c.ok for c in self.children)

    def fail(self, law, where, detail=""):
        self.violations.append(Violation(law, where, detail))

    def expect(self, condition, law, where, detail=""):
        self.checked += 1
        if not condition:
            self.fail(law, where, detail)
        return condition

    def add(self, child):
        self.children.append(child)
        self.exactness = self.exactness.meet(child.exactness)
        return child

    def all_violations(self):
        found = list(self.violations)
        for c in self.children:
            found.extend(c.all_violations())
        return found

    def find(self, title):
        """The first report titled ``title`` in this tree, or None."""
        if self.title == title:
            return self
        for c in self.children:
            found = c.find(title)
            if found is not None:
                return found
        return None

    def laws_violated(self):
        return sorted({v.law for v in self.all_violations()})

    def raise_if_failed(self, error=LawViolation):
        if not self.ok:
            first = self.all_violations()[0]
            raise error(f"{self.title}: {first}", report=self)
        return self

    def to_dict(self):
        return {
            "title": self.title,
            "ok": self.ok,
            "bound": self.bound,
            "exactness": str(self.exactness),
            "checked": self.checked,
            "violations": [
                {"law": v.law, "where": str(v.where), "detail": v.detail}
                for v in self.violations
            ],
            "children": [c.to_dict() for c in self.children],
        }

    def summary(self):
        status = "ok" if self.ok else f"FAILED ({len(self.all_violations())} violations)"
        return f"{self.title}: {status} [{self.exactness}]"
