from typing import List, Optional
from .VarietySpec import VarietySpec
from ..LabeledGraph import LabeledGraph

EXACT = "EXACT"
SOUND_UPPER = "SOUND_UPPER"


class ClosureResult:
    """
    The closure of a subgroup in the pro-V topology together with the certificates checked during its computation.
    A result with status SOUND_UPPER contains the true closure; equality holds in the limit of the search parameters.
    """

    def __init__(self, graph: LabeledGraph, variety: VarietySpec, status: str = EXACT,
                 primes_used: Optional[List[int]] = None, certificates: Optional[List[str]] = None):
        if status not in (EXACT, SOUND_UPPER):
            raise ValueError("Unknown closure status '" + status + "'.")
        self.graph = graph
        self.variety = variety
        self.status = status
        self.primes_used = [] if primes_used is None else list(primes_used)
        self.certificates = [] if certificates is None else list(certificates)

    def generators(self):
        return self.graph.generators()

    def toJson(self) -> dict:
        return {"variety": str(self.variety), "status": self.status, "primes_used": self.primes_used,
                "graph": self.graph.toJson(), "generators": [str(w) for w in self.generators()],
                "certificates": self.certificates}
