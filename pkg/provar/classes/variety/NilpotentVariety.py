from sympy import Matrix, ZZ, zeros
from sympy.matrices.normalforms import smith_normal_form
from .APrimeScanVariety import APrimeScanVariety
from .PGroupVariety import PGroupVariety
from .PrimePolicy import PrimePolicy
from .VarietySpec import VarietySpec
from ..LabeledGraph import LabeledGraph


class NilpotentVariety(APrimeScanVariety):
    """
    The variety Nil of finite nilpotent groups. Its closures are the intersections of the pro-p closures over all
    primes p.
    """

    def __init__(self, policy: PrimePolicy = None, **kwargs):
        super().__init__(VarietySpec("nil"), policy, **kwargs)

    def factor(self, p: int) -> PGroupVariety:
        return PGroupVariety(p, max_vertices=self._max_vertices, max_members=self._max_members)

    def isDense(self, graph: LabeledGraph) -> bool:
        """
        Decide Nil-denseness exactly: H is dense iff it is Ab_p-dense for every prime p, i.e. iff H[F, F] = F. This is
        decided by the Smith normal form of the integral exponent matrix.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.

        Returns
        -------
        dense : bool
            True if all invariant factors of the abelian image are units.
        """
        n = graph.alphabet.size
        gens = graph.generators()
        if len(gens) < n:
            return False
        exponents = Matrix([list(map(int, w.exponentVector())) for w in gens])
        # zero columns keep the invariant factors and make the matrix square
        snf = smith_normal_form(exponents.row_join(zeros(len(gens), len(gens) - n)), domain=ZZ)
        return all(abs(snf[i, i]) == 1 for i in range(n))
