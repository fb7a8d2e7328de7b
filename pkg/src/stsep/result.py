from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


@dataclass
class SeparatorResult:
    feasible: bool
    weight: Optional[Fraction] = None
    obstacle_ids: list = field(default_factory=list)
    algorithm: str = ""
    witness: Optional[list] = None

    @staticmethod
    def infeasible(algorithm: str) -> "SeparatorResult":
        return SeparatorResult(False, None, [], algorithm)


def combine(stripped, result: SeparatorResult) -> SeparatorResult:
    """Take the better of the cheapest lone separator and a subproblem result."""
    if not stripped:
        return result
    oid, w = min(stripped, key=lambda p: (p[1], p[0]))
    if result.feasible and result.weight <= w:
        return result
    return SeparatorResult(True, Fraction(w), [oid], result.algorithm, None)


def ids_to_result(path_ids, weights, algorithm, witness=None) -> SeparatorResult:
    """Result for the obstacles met along a witness path, each paid once."""
    ids = sorted(set(path_ids))
    total = sum((Fraction(weights[i]) for i in ids), Fraction(0))
    return SeparatorResult(True, total, ids, algorithm, witness)
