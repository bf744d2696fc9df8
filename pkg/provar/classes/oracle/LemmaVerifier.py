from functools import reduce
from typing import List, Tuple
from .FiniteGroup import FiniteGroup
from .GroupCatalog import GroupCatalog
from ...lib.logger import logger


class LemmaVerifier:
    """
    Check the finite group facts behind the intersection formula for supersolvable closures on explicit groups.
    """

    @staticmethod
    def verifyCoreLemma(group: FiniteGroup) -> bool:
        """
        Check that the intersection of the p'-cores O_p'(G) over the prime divisors p of |G| is trivial.
        """
        if group.order == 1:
            return True
        cores = [group.pPrimeCore(p) for p in group.primes()]
        return reduce(lambda a, b: a & b, cores) == group.trivial()

    @staticmethod
    def verifyIntersectionLemma(group: FiniteGroup) -> bool:
        """
        Check that every subgroup M of G equals the intersection of the subgroups M O_p'(G) over the prime divisors p
        of |G|.

        Parameters
        ----------
        group : FiniteGroup
            The group to check.

        Returns
        -------
        res : bool
            True if the identity holds for every subgroup.
        """
        if group.order == 1:
            return True
        cores = [group.pPrimeCore(p) for p in group.primes()]
        for m in group.subgroups():
            if reduce(lambda a, b: a & b, [group.product(m, core) for core in cores]) != m:
                return False
        return True

    @staticmethod
    def verifyQuotientLemma(group: FiniteGroup) -> bool:
        """
        Check that G / O_p'(G) lies in H_p for every prime divisor p of the order of a supersolvable group G.

        Parameters
        ----------
        group : FiniteGroup
            A supersolvable group.

        Returns
        -------
        res : bool
            True if all quotients lie in the respective varieties.
        """
        if not group.isSupersolvable():
            raise ValueError("The group " + group.name + " is not supersolvable.")
        return all(group.quotient(group.pPrimeCore(p)).inHp(p) for p in group.primes())

    @classmethod
    def verifyCatalog(cls, catalog: GroupCatalog) -> List[Tuple[str, str, bool]]:
        """
        Run all checks on every group of a catalog. The quotient check is only applied to supersolvable groups.

        Parameters
        ----------
        catalog : GroupCatalog
            The groups to check.

        Returns
        -------
        results : List[Tuple[str, str, bool]]
            Triples of group name, check name and outcome.
        """
        results = []
        for group in catalog:
            results.append((group.name, "core", cls.verifyCoreLemma(group)))
            results.append((group.name, "intersection", cls.verifyIntersectionLemma(group)))
            if group.isSupersolvable():
                results.append((group.name, "quotient", cls.verifyQuotientLemma(group)))
        failed = [r for r in results if not r[2]]
        if len(failed) > 0:
            logger.error("%d lemma checks failed." % len(failed), exit_=False)
        return results
