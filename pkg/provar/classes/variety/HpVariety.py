from .AVariety import AVariety
from .AbelianVariety import AbelianVariety
from .ClosureResult import ClosureResult
from .PGroupVariety import PGroupVariety
from .VarietySpec import VarietySpec
from ..LabeledGraph import LabeledGraph
from ..lattice.BasisDictionary import BasisDictionary
from ..lattice.Fringe import Fringe
from ..modlin.MagnusQuotient import MagnusQuotient
from ...lib.exceptions import CertificateFailure
from ...lib.logger import logger


class HpVariety(AVariety):
    """
    The variety H_p of extensions of p-groups by abelian groups of exponent dividing p - 1. With N = [F, F]F^(p-1)
    a subgroup H is H_p-dense iff it is Ab_(p-1)-dense and H n N is Ab_p-dense in N. For p = 2 the variety is G_2.
    """

    def __init__(self, p: int, **kwargs):
        """
        Initialize a new H_p variety

        Parameters
        ----------
        p : int
            The prime.
        """
        super().__init__(VarietySpec("hp", p), **kwargs)
        self.p = self.spec.param
        self._inner = PGroupVariety(self.p, max_vertices=self._max_vertices, max_members=self._max_members)

    def layer(self, graph: LabeledGraph) -> LabeledGraph:
        """
        The graph of N = [F, F]F^(p-1) over the alphabet of a subgroup.
        """
        return LabeledGraph.cayley(self.p - 1, graph.alphabet)

    def isDense(self, graph: LabeledGraph, cross_check: bool = None) -> bool:
        """
        Decide H_p-denseness by the rank conditions on H and H n N.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.
        cross_check : bool
            Compare with the surjectivity onto F / [N, N]N^p. Disagreement raises a CertificateFailure.

        Returns
        -------
        dense : bool
            True if the subgroup is H_p-dense.
        """
        cross_check = self._cross_check if cross_check is None else cross_check
        if self.p == 2:
            dense = self._inner.isDense(graph)
        else:
            layer = self.layer(graph)
            dense = AbelianVariety(self.p - 1).isDense(graph) and self._inner.isDenseIn(graph & layer, layer)
        if cross_check:
            quotient = MagnusQuotient(self.p, graph.alphabet.size)
            quotient.validate()
            full = quotient.isFullImage(graph.generators())
            if full != dense:
                msg = "H_%d-denseness by rank conditions (%s) disagrees with the quotient check (%s)." % (
                    self.p, dense, full)
                logger.error(msg, exit_=False)
                raise CertificateFailure(msg)
        return dense

    def calcClosure(self, graph: LabeledGraph) -> ClosureResult:
        """
        Compute the H_p-closure: rewrite H n N in the Schreier basis of N, take its pro-p closure inside N, carry it
        back to F and join it with H.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.

        Returns
        -------
        closure : ClosureResult
            The closure. The status is inherited from the pro-p closure inside N.
        """
        if self.p == 2:
            inner = self._inner.calcClosure(graph)
            return ClosureResult(inner.graph, self.spec, inner.status, certificates=inner.certificates)
        layer = self.layer(graph)
        dictionary = BasisDictionary.fromGraph(layer)
        intersection = dictionary.rewriteGraph(graph & layer)
        logger.debug("H n N has rank %d in N of rank %d." % (intersection.rank(), layer.rank()))
        inner = self._inner.calcClosure(intersection)
        closure = dictionary.blowUp(inner.graph) | graph
        certificates = ["inner: " + c for c in inner.certificates]
        self._certify(graph <= closure, "closure contains the subgroup", certificates)
        self._certify(Fringe.isMember(graph, closure), self.spec.label() + "-closure lies in the fringe", certificates)
        if self._cross_check:
            quotient = MagnusQuotient(self.p, graph.alphabet.size)
            quotient.validate()
            gens = graph.generators()
            self._certify(all(quotient.closureContains(gens, w) for w in closure.generators()),
                          "closure lies in H[N, N]N^%d" % self.p, certificates)
        return ClosureResult(closure, self.spec, inner.status, certificates=certificates)
