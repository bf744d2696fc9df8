from .AVariety import AVariety
from .AbelianVariety import AbelianVariety
from .ClosureResult import ClosureResult, EXACT
from .VarietySpec import VarietySpec
from ..GraphMorphism import GraphMorphism
from ..LabeledGraph import LabeledGraph
from ..lattice.BasisDictionary import BasisDictionary
from ..lattice.Fringe import Fringe
from ..lattice.Lattice import Lattice
from ..modlin.ModSubgroup import ModSubgroup
from ...lib.cache import cache
from ...lib.exceptions import NotASubgroup
from ...lib.logger import logger


class PGroupVariety(AVariety):
    """
    The variety G_p of finite p-groups.
    """

    EXHAUSTIVE_VERTICES = 6

    def __init__(self, p: int, **kwargs):
        """
        Initialize a new p-group variety

        Parameters
        ----------
        p : int
            The prime.
        """
        super().__init__(VarietySpec("gp", p), **kwargs)
        self.p = self.spec.param

    def isDense(self, graph: LabeledGraph) -> bool:
        # a subgroup is G_p-dense iff it is Ab_p-dense
        return AbelianVariety(self.p).isDense(graph)

    def isDenseIn(self, graph: LabeledGraph, overgroup: LabeledGraph) -> bool:
        """
        Decide whether a subgroup H is dense in an overgroup K with respect to the pro-p topology of K. K is free on
        its Schreier basis, so this is the Ab_p-denseness of H rewritten in that basis.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of H.
        overgroup : LabeledGraph
            The graph of K.

        Returns
        -------
        dense : bool
            True if H is dense in K. The trivial group is dense in itself.
        """
        if GraphMorphism.find(graph, overgroup) is None:
            raise NotASubgroup("The first subgroup is not contained in the second one.")
        if overgroup.rank() == 0:
            return True
        dictionary = BasisDictionary.fromGraph(overgroup)
        words = dictionary.rewriteWords(graph.generators())
        return ModSubgroup.abelianImage(words, self.p, overgroup.rank()).isFull()

    def ascend(self, graph: LabeledGraph) -> LabeledGraph:
        """
        Climb the fringe of a subgroup H through single merges: a quotient of the current graph is accepted if H is
        dense in it. Denseness in a member does not depend on the intermediate overgroup, so rejected quotients stay
        rejected. Every accepted member lies in the closure of H.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of H.

        Returns
        -------
        top : LabeledGraph
            A member in which H is dense and which has no quotient by a single merge with this property.
        """
        top = graph
        rejected = set()
        rank = graph.rank()
        climbing = True
        while climbing:
            climbing = False
            for quotient in Fringe.quotients(top):
                if quotient in rejected:
                    continue
                # the image of H spans the Frattini quotient of a dense overgroup
                if quotient.rank() <= rank and self.isDenseIn(graph, quotient):
                    top = quotient
                    climbing = True
                    break
                rejected.add(quotient)
        return top

    def calcClosure(self, graph: LabeledGraph) -> ClosureResult:
        """
        The pro-p closure, reusing the results of earlier runs.
        """
        return closureOf(graph, self.p, self._max_vertices, self._max_members)

    def computeClosure(self, graph: LabeledGraph) -> ClosureResult:
        """
        Compute the pro-p closure as the join of all fringe members in which the subgroup is dense. The members are
        found by an ascent through single merges. If the graph reached is small, the dense members of its fringe are
        enumerated and joined, which covers all dense members of the fringe of the subgroup.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of the subgroup.

        Returns
        -------
        closure : ClosureResult
            The closure with status EXACT.
        """
        certificates = []
        if self.isDense(graph):
            closure = LabeledGraph.free(graph.alphabet)
            certificates.append("completeness: the subgroup is dense in the free group")
            return ClosureResult(closure, self.spec, EXACT, certificates=certificates)
        top = self.ascend(graph)
        if top.vertex_count <= min(self.EXHAUSTIVE_VERTICES, self._max_vertices):
            fringe = Fringe.of(top, self._max_vertices, self._max_members)
            dense = [k for k in fringe if self.isDenseIn(graph, k)]
            logger.info("%d of %d fringe members are %s-dense overgroups." % (len(dense), len(fringe),
                                                                               self.spec.label()))
            closure = Lattice.joinAll(dense, graph.alphabet)
            self._certify(all(k <= closure for k in dense),
                          "closure contains all %d dense fringe members" % len(dense), certificates)
            certificates.append("completeness: the closure is the join of the dense fringe members")
        else:
            closure = top
            certificates.append("completeness: no single merge of the closure keeps the subgroup dense")
        self._certify(Fringe.isMember(graph, closure), self.spec.label() + "-closure lies in the fringe", certificates)
        self._certify(self.isDenseIn(graph, closure), "subgroup is dense in the " + self.spec.label() + "-closure",
                      certificates)
        return ClosureResult(closure, self.spec, EXACT, certificates=certificates)


@cache
def closureOf(graph: LabeledGraph, p: int, max_vertices: int, max_members: int) -> ClosureResult:
    return PGroupVariety(p, max_vertices=max_vertices, max_members=max_members).computeClosure(graph)
