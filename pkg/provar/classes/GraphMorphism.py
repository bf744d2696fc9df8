from collections import deque
from typing import Dict, Optional
from .LabeledGraph import LabeledGraph
from ..lib.exceptions import AlphabetMismatch


class GraphMorphism:
    """
    A morphism of labeled graphs preserving base vertices and labels. Between reduced graphs a morphism exists iff
    the subgroup of the source is contained in the subgroup of the target, and it is unique.
    """

    def __init__(self, source: LabeledGraph, target: LabeledGraph, vertex_map: Dict[int, int]):
        """
        Initialize a new morphism

        Parameters
        ----------
        source : LabeledGraph
            The source graph.
        target : LabeledGraph
            The target graph.
        vertex_map : Dict[int, int]
            The image of every source vertex.
        """
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)
        self.edge_map = {}
        for i, (u, label, v) in enumerate(source.edges):
            step = target.successor(vertex_map[u], label, 1)
            if step is None or step[0] != vertex_map[v]:
                raise ValueError("The vertex map does not extend to a morphism.")
            self.edge_map[i] = step[1]
        self.injective = len(set(self.vertex_map.values())) == source.vertex_count
        self.surjective = len(set(self.vertex_map.values())) == target.vertex_count and \
            len(set(self.edge_map.values())) == len(target.edges)

    @classmethod
    def find(cls, source: LabeledGraph, target: LabeledGraph) -> Optional["GraphMorphism"]:
        """
        Find the morphism between two reduced graphs by propagating base to base along the edges.

        Parameters
        ----------
        source : LabeledGraph
            The source graph.
        target : LabeledGraph
            The target graph.

        Returns
        -------
        morphism : Optional[GraphMorphism]
            The unique morphism or None if the subgroup of the source is not contained in the subgroup of the target.
        """
        if source.alphabet != target.alphabet:
            raise AlphabetMismatch("Alphabets '" + str(source.alphabet) + "' and '" + str(target.alphabet) +
                                   "' differ.")
        vertex_map = {source.base: target.base}
        queue = deque([source.base])
        while queue:
            v = queue.popleft()
            for label in range(source.alphabet.size):
                for sign in (1, -1):
                    step = source.successor(v, label, sign)
                    if step is None:
                        continue
                    image = target.successor(vertex_map[v], label, sign)
                    if image is None:
                        return None
                    w = step[0]
                    if w in vertex_map:
                        if vertex_map[w] != image[0]:
                            return None
                    else:
                        vertex_map[w] = image[0]
                        queue.append(w)
        return cls(source, target, vertex_map)

    def toJson(self) -> dict:
        return {"vertex_map": [self.vertex_map[v] for v in range(self.source.vertex_count)],
                "injective": self.injective, "surjective": self.surjective}
