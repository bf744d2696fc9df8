from abc import abstractmethod
from typing import Dict
from .AVariety import AVariety
from .ClosureResult import ClosureResult, SOUND_UPPER
from .PrimePolicy import PrimePolicy
from .VarietySpec import VarietySpec
from ..LabeledGraph import LabeledGraph
from ...lib.logger import logger


class APrimeScanVariety(AVariety):
    """
    Abstract super class of varieties whose closures are intersections of closures over all primes. The primes are
    scanned according to a PrimePolicy, hence the result is an upper bound of the true closure.
    """

    @abstractmethod
    def __init__(self, spec: VarietySpec, policy: PrimePolicy = None, **kwargs):
        """
        Initialize a new variety

        Parameters
        ----------
        spec : VarietySpec
            The description of the variety.
        policy : PrimePolicy
            The primes to scan.
        """
        super().__init__(spec, **kwargs)
        self.policy = PrimePolicy() if policy is None else policy
        self.closures: Dict[int, ClosureResult] = {}

    @abstractmethod
    def factor(self, p: int) -> AVariety:
        """
        The variety whose closures are intersected at the prime p.
        """
        pass

    def calcClosure(self, graph: LabeledGraph) -> ClosureResult:
        """
        Intersect the closures at the primes of the policy in ascending order. The scan stops when all base primes
        are processed and the intersection has not changed for a window of consecutive primes.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.

        Returns
        -------
        closure : ClosureResult
            The closure with status SOUND_UPPER.
        """
        self.closures = {}
        scanned = []
        result = None
        stable = 0
        stopped = False
        for p in self.policy.primes():
            scanned.append(p)
            if result == graph:
                # every closure contains the subgroup
                current = result
            else:
                logger.info("Computing the %s-closure" % self.factor(p).spec.label(), extra={"spinning": True})
                self.closures[p] = self.factor(p).calcClosure(graph)
                current = self.closures[p].graph if result is None else result & self.closures[p].graph
            stable = stable + 1 if current == result else 0
            result = current
            if p >= self.policy.base_primes[-1] and stable >= self.policy.window:
                stopped = True
                break
        logger.info("Scanned primes " + ", ".join(str(p) for p in scanned), extra={"spinning": False})
        certificates = []
        if not stopped:
            msg = "PolicyExhausted: no stable intersection up to the maximum prime %d" % self.policy.max_prime
            logger.warning(msg)
            certificates.append(msg)
        skipped = [p for p in scanned if p not in self.closures]
        if len(skipped) > 0:
            certificates.append("closures at the primes " + ", ".join(str(p) for p in skipped) +
                                " are not computed: the intersection equals the subgroup")
        self._certify(graph <= result, "closure contains the subgroup", certificates)
        self._certify(all(result <= c.graph for c in self.closures.values()),
                      "closure is contained in the closure at every scanned prime", certificates)
        return ClosureResult(result, self.spec, SOUND_UPPER, scanned, certificates)
