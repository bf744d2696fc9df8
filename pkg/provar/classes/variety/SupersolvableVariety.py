from .APrimeScanVariety import APrimeScanVariety
from .HpVariety import HpVariety
from .PrimePolicy import PrimePolicy
from .VarietySpec import VarietySpec
from ..LabeledGraph import LabeledGraph
from ...lib.logger import logger


class SupersolvableVariety(APrimeScanVariety):
    """
    The variety Su of finite supersolvable groups. Its closures are the intersections of the H_p-closures over all
    primes p. The closure is not asserted to lie in the fringe of the subgroup.
    """

    def __init__(self, policy: PrimePolicy = None, **kwargs):
        super().__init__(VarietySpec("su"), policy, **kwargs)

    def factor(self, p: int) -> HpVariety:
        return HpVariety(p, max_vertices=self._max_vertices, max_members=self._max_members,
                         cross_check=self._cross_check)

    def isDense(self, graph: LabeledGraph) -> bool:
        """
        Decide Su-denseness up to the maximum prime of the policy. A negative answer is definite, a positive one only
        covers the scanned primes.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.

        Returns
        -------
        dense : bool
            True if the subgroup is H_p-dense for every scanned prime p.
        """
        for p in self.policy.primes():
            if not self.factor(p).isDense(graph):
                return False
        logger.warning("Su-denseness is only checked for primes up to %d." % self.policy.max_prime)
        return True
