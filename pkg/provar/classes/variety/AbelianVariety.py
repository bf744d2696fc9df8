from .AVariety import AVariety
from .ClosureResult import ClosureResult, EXACT
from .VarietySpec import VarietySpec
from ..LabeledGraph import LabeledGraph
from ..modlin.ModSubgroup import ModSubgroup
from ...lib.helpers import primeDivisors


class AbelianVariety(AVariety):
    """
    The variety Ab_d of abelian groups of exponent dividing d. The closure of H is H[F, F]F^d.
    """

    def __init__(self, d: int, **kwargs):
        """
        Initialize a new abelian variety

        Parameters
        ----------
        d : int
            The exponent (d >= 1).
        """
        super().__init__(VarietySpec("ab", d), **kwargs)
        self.d = d

    def abelianImage(self, graph: LabeledGraph) -> ModSubgroup:
        return ModSubgroup.abelianImage(graph.generators(), self.d, graph.alphabet.size)

    def isDense(self, graph: LabeledGraph) -> bool:
        return self.abelianImage(graph).isFull()

    def isDenseByPrimes(self, graph: LabeledGraph) -> bool:
        """
        Decide denseness prime by prime: H is Ab_d-dense iff it is Ab_q-dense for every prime divisor q of d.
        """
        return all(AbelianVariety(q).isDense(graph) for q in primeDivisors(self.d))

    def calcClosure(self, graph: LabeledGraph) -> ClosureResult:
        certificates = []
        closure = self.abelianImage(graph).cosetGraph(graph.alphabet)
        self._certify(graph <= closure, "closure contains the subgroup", certificates)
        return ClosureResult(closure, self.spec, EXACT, certificates=certificates)
