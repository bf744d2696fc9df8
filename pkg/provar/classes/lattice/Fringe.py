from collections import deque
from typing import Dict, Iterator, List
from ..GraphMorphism import GraphMorphism
from ..LabeledGraph import LabeledGraph, RawGraph
from ...lib.cache import cache
from ...lib.exceptions import CertificateFailure, FringeCapExceeded
from ...lib.logger import logger


class Fringe:
    """
    The A-fringe of a subgroup H: all subgroups whose reduced graph is the image of a surjective morphism from the
    graph of H. The fringe is finite and is enumerated by merging pairs of vertices and folding.
    """

    def __init__(self, origin: LabeledGraph, max_vertices: int = 12, max_members: int = 20000):
        """
        Enumerate the fringe of a subgroup

        Parameters
        ----------
        origin : LabeledGraph
            The graph of the subgroup.
        max_vertices : int
            The maximum number of vertices of the origin for the exhaustive enumeration.
        max_members : int
            The maximum number of members.
        """
        if origin.vertex_count > max_vertices:
            raise FringeCapExceeded(max_vertices, "vertices")
        self.origin = origin
        self.witnesses: Dict[LabeledGraph, GraphMorphism] = {}
        self.__add(origin, max_members)
        queue = deque([origin])
        while queue:
            for quotient in self.quotients(queue.popleft()):
                if quotient not in self.witnesses:
                    self.__add(quotient, max_members)
                    queue.append(quotient)
        logger.info("The fringe of a graph with %d vertices has %d members." % (origin.vertex_count, len(self)))

    def __add(self, graph: LabeledGraph, max_members: int):
        if len(self.witnesses) >= max_members:
            raise FringeCapExceeded(max_members, "members")
        morphism = GraphMorphism.find(self.origin, graph)
        if morphism is None or not morphism.surjective:
            msg = "Fringe member is not a surjective image of the origin."
            logger.error(msg, exit_=False)
            raise CertificateFailure(msg)
        self.witnesses[graph] = morphism

    @staticmethod
    def of(origin: LabeledGraph, max_vertices: int = 12, max_members: int = 20000) -> "Fringe":
        """
        Get the fringe of a subgroup, reusing earlier enumerations.
        """
        return enumerateFringe(origin, max_vertices, max_members)

    @staticmethod
    def quotients(graph: LabeledGraph) -> Iterator[LabeledGraph]:
        """
        The reduced graphs obtained by merging one pair of vertices and folding, in the order of the vertex pairs.
        Every member of the fringe is reached by a sequence of such merges.

        Parameters
        ----------
        graph : LabeledGraph
            The graph to merge in.

        Yields
        ------
        quotient : LabeledGraph
            The folded graph of a merge.
        """
        for u in range(graph.vertex_count):
            for v in range(u + 1, graph.vertex_count):
                raw = RawGraph(graph.alphabet, graph.vertex_count, graph.base)
                for e in graph.edges:
                    raw.addEdge(*e)
                raw.merge(u, v)
                yield raw.fold()

    @staticmethod
    def isMember(origin: LabeledGraph, graph: LabeledGraph) -> bool:
        """
        Decide fringe membership without enumeration: the graph lies in the fringe of the origin iff the morphism
        from the origin exists and is surjective.

        Parameters
        ----------
        origin : LabeledGraph
            The graph of the subgroup.
        graph : LabeledGraph
            The graph to check.

        Returns
        -------
        res : bool
            True if the graph is a member of the fringe.
        """
        morphism = GraphMorphism.find(origin, graph)
        return morphism is not None and morphism.surjective

    @property
    def members(self) -> List[LabeledGraph]:
        return list(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)

    def __iter__(self) -> Iterator[LabeledGraph]:
        return iter(self.witnesses)

    def __contains__(self, graph: LabeledGraph) -> bool:
        return graph in self.witnesses

    def toJson(self) -> list:
        """
        The members together with the vertex maps of their surjection witnesses.
        """
        return [{"graph": g.toJson(), "generators": [str(w) for w in g.generators()],
                 "witness": m.toJson()["vertex_map"]} for g, m in self.witnesses.items()]


@cache
def enumerateFringe(origin: LabeledGraph, max_vertices: int, max_members: int) -> Fringe:
    return Fringe(origin, max_vertices, max_members)
