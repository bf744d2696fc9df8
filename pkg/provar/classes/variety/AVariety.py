from abc import abstractmethod
from typing import List
from .ClosureResult import ClosureResult
from .VarietySpec import VarietySpec
from ..LabeledGraph import LabeledGraph
from ..Word import Word
from ...lib.exceptions import CertificateFailure
from ...lib.logger import logger


class AVariety:
    """
    Abstract super class of the varieties of finite groups which decide denseness and compute closures in the
    corresponding profinite topology on a free group.
    """

    @abstractmethod
    def __init__(self, spec: VarietySpec, max_vertices: int = 12, max_members: int = 20000, cross_check: bool = False):
        """
        Initialize a new variety

        Parameters
        ----------
        spec : VarietySpec
            The description of the variety.
        max_vertices : int
            The vertex cap for the exhaustive fringe enumeration.
        max_members : int
            The member cap for the exhaustive fringe enumeration.
        cross_check : bool
            Verify results by independent computations where available.
        """
        self.spec = spec
        self._max_vertices = max_vertices
        self._max_members = max_members
        self._cross_check = cross_check

    @abstractmethod
    def isDense(self, graph: LabeledGraph) -> bool:
        """
        Decide whether a subgroup is dense in the free group.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.

        Returns
        -------
        dense : bool
            True if the closure of the subgroup is the whole free group.
        """
        pass

    @abstractmethod
    def calcClosure(self, graph: LabeledGraph) -> ClosureResult:
        """
        Compute the closure of a subgroup.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.

        Returns
        -------
        closure : ClosureResult
            The closure with its certificates.
        """
        pass

    def contains(self, graph: LabeledGraph, word: Word) -> bool:
        """
        Decide the membership of a word in the closure of a subgroup.
        """
        return self.calcClosure(graph).graph.contains(word)

    @staticmethod
    def _certify(condition: bool, msg: str, certificates: List[str]):
        """
        Record a checked certificate. A failed certificate is a violated theoretical guarantee and aborts the
        computation.

        Parameters
        ----------
        condition : bool
            The outcome of the check.
        msg : str
            Description of the checked assertion.
        certificates : List[str]
            The list of passed certificates.
        """
        if not condition:
            logger.error("Certificate failed: " + msg, exit_=False)
            raise CertificateFailure("Certificate failed: " + msg)
        certificates.append(msg)
