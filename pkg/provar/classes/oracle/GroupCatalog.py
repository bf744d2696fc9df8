from itertools import combinations_with_replacement
from typing import List, Optional
from sympy import primerange
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup
from .FiniteGroup import FiniteGroup
from ..variety.VarietySpec import VarietySpec
from ...lib.exceptions import OrderCapExceeded
from ...lib.logger import logger


class GroupCatalog:
    """
    A pool of small finite groups used as witnesses: cyclic groups and their products, dihedral groups, Q8, S3, A4,
    S4, A5, metacyclic groups Z/p^kZ x| Z/dZ and products of the non-abelian ones with cyclic groups. Groups are
    deduplicated by their fingerprint.
    """

    def __init__(self, max_order: int = 24):
        """
        Build the catalog

        Parameters
        ----------
        max_order : int
            The maximum order of the groups (at most 64).
        """
        if max_order > FiniteGroup.MAX_ORDER:
            raise OrderCapExceeded(max_order, FiniteGroup.MAX_ORDER)
        self.max_order = max_order
        self._groups: List[FiniteGroup] = []
        self._fingerprints = set()
        self.__build()
        self._groups.sort(key=lambda g: g.order)
        logger.debug("The group catalog up to order %d contains %d groups." % (max_order, len(self._groups)))

    def __add(self, group: FiniteGroup):
        if group.order > self.max_order:
            return
        fingerprint = group.fingerprint()
        if fingerprint not in self._fingerprints:
            self._fingerprints.add(fingerprint)
            self._groups.append(group)

    def __build(self):
        m = self.max_order
        for n in range(1, m + 1):
            self.__add(FiniteGroup.cyclic(n))
        for k in (2, 3):
            for orders in combinations_with_replacement(range(2, m // 2 + 1), k):
                size = 1
                for o in orders:
                    size *= o
                if size <= m:
                    group = FiniteGroup.cyclic(orders[0])
                    for o in orders[1:]:
                        group = FiniteGroup.directProduct(group, FiniteGroup.cyclic(o))
                    self.__add(group)
        for n, name, factory in ((3, "S3", SymmetricGroup), (4, "A4", AlternatingGroup), (4, "S4", SymmetricGroup),
                                 (5, "A5", AlternatingGroup)):
            if factory(n).order() <= m:
                self.__add(FiniteGroup.fromPermutationGroup(factory(n), name))
        for n in range(3, m // 2 + 1):
            self.__add(FiniteGroup.dihedral(n))
        if m >= 8:
            self.__add(FiniteGroup.quaternion())
        for p in primerange(2, m + 1):
            q = int(p)
            while q <= m // 2:
                for d in range(2, m // q + 1):
                    for r in range(2, q):
                        if pow(r, d, q) == 1 and r % p != 0:
                            self.__add(FiniteGroup.semidirect(q, d, r))
                q *= int(p)
        for group in list(self._groups):
            if not group.isAbelian():
                for n in range(2, m // group.order + 1):
                    self.__add(FiniteGroup.directProduct(group, FiniteGroup.cyclic(n)))

    def groups(self, variety: Optional[VarietySpec] = None) -> List[FiniteGroup]:
        """
        The groups of the catalog, optionally restricted to a variety.

        Parameters
        ----------
        variety : VarietySpec
            The variety to filter by. All groups are returned if omitted.

        Returns
        -------
        groups : List[FiniteGroup]
            The groups ordered by their order.
        """
        if variety is None:
            return list(self._groups)
        return [g for g in self._groups if g.inVariety(variety)]

    def __len__(self) -> int:
        return len(self._groups)

    def __iter__(self):
        return iter(self._groups)
