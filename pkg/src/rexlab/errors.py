"""Exception hierarchy shared by every rexlab module."""

from __future__ import annotations


class RexlabError(Exception):
    """Base class for all rexlab errors."""


class OrderCapExceeded(RexlabError, ValueError):
    pass


class NotAnEdge(RexlabError, ValueError):
    pass


class MalformedGraph6(RexlabError, ValueError):
    pass


class BadParams(RexlabError, ValueError):
    pass


class OddOrder(BadParams):
    pass


class NoPartition(BadParams):
    pass


class NotATree(BadParams):
    pass


class InfeasibleDegrees(BadParams):
    pass


class UnsupportedResidue(BadParams):
    pass


class Infeasible(RexlabError):
    """The requested object provably does not exist (parity, degree bounds, ...)."""


class ParityInfeasible(Infeasible):
    pass


class SearchExhausted(RexlabError):
    """A budgeted search gave up. This says nothing about existence."""


class DichotomyViolated(RexlabError):
    pass


class BudgetExceeded(RexlabError):
    pass


class NotExhaustive(RexlabError):
    pass


class C5PartitionError(RexlabError):
    pass


class NotTriangleFree(C5PartitionError):
    pass


class NotRegular(C5PartitionError):
    pass


class Bipartite(C5PartitionError):
    pass


class DegreeTooLow(C5PartitionError):
    pass


class ShortestOddCycleTooLong(C5PartitionError):
    pass


class StructureViolation(C5PartitionError):
    pass
