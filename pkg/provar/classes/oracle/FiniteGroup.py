from collections import deque
from functools import reduce
from itertools import product
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple
import numpy as np
from sympy import primefactors
from sympy.combinatorics import PermutationGroup
from ..variety.VarietySpec import VarietySpec
from ...lib.exceptions import NotNormal, OrderCapExceeded

Subgroup = FrozenSet[int]


class FiniteGroup:
    """
    A finite group given by its multiplication table. Elements are the integers 0, ..., m - 1 and subgroups are
    frozensets of elements.
    """
    MAX_ORDER = 64

    def __init__(self, table: np.ndarray, name: str = "G", labels: Optional[Sequence[str]] = None):
        """
        Initialize a new finite group. The table is validated to be a group table.

        Parameters
        ----------
        table : ndarray
            The multiplication table, table[x, y] is the index of x * y.
        name : str
            The name of the group.
        labels : Sequence[str]
            Optional labels of the elements.
        """
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
            raise ValueError("A group table must be a non-empty square matrix.")
        m = table.shape[0]
        if m > self.MAX_ORDER:
            raise OrderCapExceeded(m, self.MAX_ORDER)
        if table.min() < 0 or table.max() >= m:
            raise ValueError("The group table contains invalid entries.")
        identities = [e for e in range(m) if np.array_equal(table[e], np.arange(m)) and
                      np.array_equal(table[:, e], np.arange(m))]
        if len(identities) != 1:
            raise ValueError("The group table has no identity.")
        e = identities[0]
        inv = np.full(m, -1, dtype=np.int64)
        for x in range(m):
            right = np.flatnonzero(table[x] == e)
            if len(right) != 1 or table[right[0], x] != e:
                raise ValueError("Element %d has no inverse." % x)
            inv[x] = right[0]
        if not np.array_equal(table[table], table[:, table]):
            raise ValueError("The group table is not associative.")
        self.table = table
        self.order = m
        self.identity = e
        self.inv = inv
        self.name = name
        self.labels = [str(x) for x in range(m)] if labels is None else list(labels)
        self._subgroups: Optional[List[Subgroup]] = None
        self._supersolvable: Optional[bool] = None

    def __repr__(self) -> str:
        return "FiniteGroup(" + self.name + ", order=%d)" % self.order

    # ------------------------------------------------------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        r = np.arange(n)
        return cls((r[:, None] + r[None, :]) % n, "Z%d" % n)

    @classmethod
    def semidirect(cls, m: int, d: int, r: int, name: Optional[str] = None) -> "FiniteGroup":
        """
        Create the semidirect product Z/mZ x| Z/dZ in which the generator of Z/dZ acts by multiplication with r.

        Parameters
        ----------
        m : int
            The order of the normal cyclic subgroup.
        d : int
            The order of the acting cyclic group.
        r : int
            A unit modulo m with r^d = 1 mod m.
        name : str
            The name of the group.

        Returns
        -------
        group : FiniteGroup
            The group of the pairs (x, y), numbered x + m * y.
        """
        if gcd(r, m) != 1 or pow(r, d, m) != 1 % m:
            raise ValueError("%d does not define an action of Z%d on Z%d." % (r, d, m))
        size = m * d
        table = np.zeros((size, size), dtype=np.int64)
        for x1, y1, x2, y2 in product(range(m), range(d), range(m), range(d)):
            x = (x1 + pow(r, y1, m) * x2) % m
            table[x1 + m * y1, x2 + m * y2] = x + m * ((y1 + y2) % d)
        return cls(table, "Z%d:Z%d(%d)" % (m, d, r) if name is None else name)

    @classmethod
    def dihedral(cls, n: int) -> "FiniteGroup":
        return cls.semidirect(n, 2, n - 1, "D%d" % n)

    @classmethod
    def quaternion(cls) -> "FiniteGroup":
        """
        The quaternion group Q8 of the units +-1, +-i, +-j, +-k.
        """
        # units as (sign, basis index) with basis 1, i, j, k
        basis_table = [[(1, 0), (1, 1), (1, 2), (1, 3)],
                       [(1, 1), (-1, 0), (1, 3), (-1, 2)],
                       [(1, 2), (-1, 3), (-1, 0), (1, 1)],
                       [(1, 3), (1, 2), (-1, 1), (-1, 0)]]
        elements = [(s, b) for s in (1, -1) for b in range(4)]
        table = np.zeros((8, 8), dtype=np.int64)
        for i, (s1, b1) in enumerate(elements):
            for j, (s2, b2) in enumerate(elements):
                s, b = basis_table[b1][b2]
                table[i, j] = elements.index((s * s1 * s2, b))
        labels = [("" if s > 0 else "-") + "1ijk"[b] for s, b in elements]
        return cls(table, "Q8", labels)

    @classmethod
    def fromPermutationGroup(cls, group: PermutationGroup, name: str) -> "FiniteGroup":
        """
        Tabulate a sympy permutation group.

        Parameters
        ----------
        group : PermutationGroup
            The permutation group.
        name : str
            The name of the group.

        Returns
        -------
        group : FiniteGroup
            The tabulated group.
        """
        if group.order() > cls.MAX_ORDER:
            raise OrderCapExceeded(int(group.order()), cls.MAX_ORDER)
        elements = sorted(group.generate(), key=lambda g: g.array_form)
        index = {tuple(g.array_form): i for i, g in enumerate(elements)}
        table = np.array([[index[tuple((g * h).array_form)] for h in elements] for g in elements], dtype=np.int64)
        return cls(table, name, [str(g.cyclic_form) for g in elements])

    @classmethod
    def directProduct(cls, g: "FiniteGroup", h: "FiniteGroup") -> "FiniteGroup":
        """
        The direct product of two groups, the pair (x, y) has the index x * |h| + y.
        """
        if g.order * h.order > cls.MAX_ORDER:
            raise OrderCapExceeded(g.order * h.order, cls.MAX_ORDER)
        table = (g.table[:, None, :, None] * h.order + h.table[None, :, None, :]).reshape(g.order * h.order,
                                                                                      g.order * h.order)
        return cls(table, g.name + "x" + h.name)

    # ------------------------------------------------------------------------------------------------------------------
    # Elements and subgroups
    # ------------------------------------------------------------------------------------------------------------------
    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def elementOrder(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def elementOrders(self) -> List[int]:
        return [self.elementOrder(x) for x in range(self.order)]

    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), self.elementOrders(), 1)

    def isAbelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def primes(self) -> List[int]:
        """
        The prime divisors of the order.
        """
        return [] if self.order == 1 else [int(q) for q in primefactors(self.order)]

    def generate(self, elements: Iterable[int]) -> Subgroup:
        """
        The subgroup generated by some elements.

        Parameters
        ----------
        elements : Iterable[int]
            The generators.

        Returns
        -------
        subgroup : FrozenSet[int]
            The generated subgroup.
        """
        gens = list(set(int(x) for x in elements))
        res = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.mul(x, g)
                if y not in res:
                    res.add(y)
                    queue.append(y)
        return frozenset(res)

    def trivial(self) -> Subgroup:
        return frozenset([self.identity])

    def whole(self) -> Subgroup:
        return frozenset(range(self.order))

    def subgroups(self) -> List[Subgroup]:
        """
        Enumerate all subgroups as iterated joins of cyclic subgroups.

        Returns
        -------
        subgroups : List[FrozenSet[int]]
            The subgroups ordered by size and smallest elements.
        """
        if self._subgroups is None:
            cyclic = set(self.generate([x]) for x in range(self.order))
            found = set(cyclic)
            todo = deque(found)
            while todo:
                s = todo.popleft()
                for c in cyclic:
                    if not c <= s:
                        j = self.generate(s | c)
                        if j not in found:
                            found.add(j)
                            todo.append(j)
            self._subgroups = sorted(found, key=lambda s: (len(s), sorted(s)))
        return self._subgroups

    def isNormal(self, subgroup: Subgroup) -> bool:
        members = np.array(sorted(subgroup), dtype=np.int64)
        conj = self.table[self.table[:, members], self.inv[:, None]]
        return bool(np.isin(conj, members).all())

    def normalSubgroups(self) -> List[Subgroup]:
        return [s for s in self.subgroups() if self.isNormal(s)]

    def product(self, a: Iterable[int], b: Iterable[int]) -> FrozenSet[int]:
        """
        The set of products x * y with x in a and y in b.
        """
        return frozenset(int(self.table[x, y]) for x in a for y in b)

    def commutatorSubgroup(self) -> Subgroup:
        return self.generate(self.mul(self.mul(x, y), self.mul(int(self.inv[x]), int(self.inv[y])))
                             for x in range(self.order) for y in range(self.order))

    def center(self) -> Subgroup:
        return frozenset(x for x in range(self.order) if np.array_equal(self.table[x], self.table[:, x]))

    def quotient(self, normal: Subgroup) -> "FiniteGroup":
        """
        Build the quotient by a normal subgroup.

        Parameters
        ----------
        normal : FrozenSet[int]
            The normal subgroup.

        Returns
        -------
        quotient : FiniteGroup
            The group of cosets, numbered by their smallest elements.
        """
        if not self.isNormal(normal):
            raise NotNormal("The subgroup is not normal in " + self.name + ".")
        cosets = sorted(set(self.product([x], normal) for x in range(self.order)), key=min)
        index = {}
        for i, c in enumerate(cosets):
            for x in c:
                index[x] = i
        reps = [min(c) for c in cosets]
        table = np.array([[index[self.mul(x, y)] for y in reps] for x in reps], dtype=np.int64)
        return FiniteGroup(table, self.name + "/N")

    def pCore(self, p: int) -> Subgroup:
        """
        The largest normal p-subgroup O_p(G).
        """
        parts = [s for s in self.normalSubgroups() if len(primefactors(len(s))) == 0 or primefactors(len(s)) == [p]]
        return self.generate(set().union(*parts))

    def pPrimeCore(self, p: int) -> Subgroup:
        """
        The largest normal subgroup of order coprime to p, O_p'(G).

        Parameters
        ----------
        p : int
            The prime.

        Returns
        -------
        core : FrozenSet[int]
            The product of all normal subgroups of order coprime to p.
        """
        parts = [s for s in self.normalSubgroups() if len(s) % p != 0]
        return self.generate(set().union(*parts))

    # ------------------------------------------------------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------------------------------------------------------
    def isPGroup(self, p: int) -> bool:
        return self.order == 1 or self.primes() == [p]

    def isNilpotent(self) -> bool:
        """
        A finite group is nilpotent iff all its Sylow subgroups are normal, i.e. iff for every prime q the elements
        of q-power order are exactly as many as the q-part of the order.
        """
        orders = self.elementOrders()
        for q in self.primes():
            part = q ** self.__valuation(self.order, q)
            if sum(1 for k in orders if k == 1 or primefactors(k) == [q]) != part:
                return False
        return True

    @staticmethod
    def __valuation(m: int, q: int) -> int:
        k = 0
        while m % q == 0:
            m //= q
            k += 1
        return k

    def isSupersolvable(self) -> bool:
        """
        Decide supersolvability by searching a normal subgroup N of prime order with G/N supersolvable.
        """
        if self._supersolvable is None:
            if self.order == 1:
                self._supersolvable = True
            else:
                candidates = [s for s in self.normalSubgroups() if len(primefactors(len(s))) == 1 and
                              len(s) == primefactors(len(s))[0]]
                self._supersolvable = any(self.quotient(s).isSupersolvable() for s in candidates)
        return self._supersolvable

    def inHp(self, p: int) -> bool:
        """
        Decide membership in G_p * Ab_(p-1): G / O_p(G) must be abelian of exponent dividing p - 1.
        """
        top = self.quotient(self.pCore(p))
        return top.isAbelian() and (p - 1) % top.exponent() == 0

    def inVariety(self, spec: VarietySpec) -> bool:
        """
        Decide membership in a variety.

        Parameters
        ----------
        spec : VarietySpec
            The variety.

        Returns
        -------
        member : bool
            True if the group lies in the variety.
        """
        if spec.kind == "ab":
            return self.isAbelian() and spec.param % self.exponent() == 0
        if spec.kind == "gp":
            return self.isPGroup(spec.param)
        if spec.kind == "hp":
            return self.inHp(spec.param)
        if spec.kind == "nil":
            return self.isNilpotent()
        return self.isSupersolvable()

    def fingerprint(self) -> Tuple:
        """
        An isomorphism invariant: order, multiset of element orders, abelianness, order of the center and order of
        the commutator subgroup.
        """
        return (self.order, tuple(sorted(self.elementOrders())), self.isAbelian(), len(self.center()),
                len(self.commutatorSubgroup()))
