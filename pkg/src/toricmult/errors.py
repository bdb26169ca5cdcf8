"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class ToricMultError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(ToricMultError):
    """The graph description is not structurally well-formed."""


class GraphError(ToricMultError):
    """The graph parses but violates a structural invariant."""


class EmptyGraph(GraphError):
    pass


class NotBipartite(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class Disconnected(GraphError):
    pass


class GraphTooLarge(ToricMultError):
    pass


class NoCoprimeChoice(ToricMultError):
    """No orientation of the 4-cycles gives pairwise coprime special monomials."""


class NotGood(ToricMultError):
    """No tried coprime choice admits a termination certificate.

    ``status`` is ``"not-good"`` when every tried choice has an explicit
    product violation and the assignment space was exhausted, otherwise
    ``"unknown"``.
    """

    def __init__(self, reason: str, status: str, details: list[dict] | None = None,
                 exhausted: bool = True):
        self.reason = reason
        self.status = status
        self.details = details or []
        self.exhausted = exhausted
        super().__init__(f"graph is not good ({reason}, status {status})")

    @property
    def summary(self) -> str:
        sizes = [len(d["violation"]) for d in self.details if d.get("violation")]
        if self.status == "not-good" and sizes:
            return f"product-violation t={max(sizes)}"
        return self.reason

    def to_dict(self) -> dict:
        return {
            "error": "NotGood",
            "reason": self.reason,
            "summary": self.summary,
            "status": self.status,
            "exhausted": self.exhausted,
            "choices": self.details,
        }


class DimensionMismatch(ToricMultError):
    pass


class NonIntegerResult(ToricMultError):
    pass


class EnumerationTooLarge(ToricMultError):
    pass


class StepBudgetExceeded(ToricMultError):
    pass


class NotStabilized(ToricMultError):
    pass


class NotQuadratic(ToricMultError):
    """The toric ideal needs generators of degree above 2."""

    def __init__(self, witness: tuple[str, ...]):
        self.witness = witness
        super().__init__(f"induced cycle of length {len(witness)}: {' - '.join(witness)}")


class VerificationMismatch(ToricMultError):
    pass
