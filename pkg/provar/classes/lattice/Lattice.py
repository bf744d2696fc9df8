from collections import deque
from functools import reduce
from typing import Iterable, Optional
from ..Alphabet import Alphabet
from ..LabeledGraph import LabeledGraph, RawGraph
from ...lib.exceptions import AlphabetMismatch


class Lattice:
    """
    Lattice operations on the subgroups of a free group represented by reduced graphs.
    """

    @staticmethod
    def intersect(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
        """
        Intersect two subgroups by the pullback (product) graph. Only the component of the pair of base vertices is
        built, the result is pruned to its core.

        Parameters
        ----------
        g1 : LabeledGraph
            The graph of the first subgroup.
        g2 : LabeledGraph
            The graph of the second subgroup.

        Returns
        -------
        graph : LabeledGraph
            The graph of the intersection.
        """
        if g1.alphabet != g2.alphabet:
            raise AlphabetMismatch("Alphabets '" + str(g1.alphabet) + "' and '" + str(g2.alphabet) + "' differ.")
        start = (g1.base, g2.base)
        number = {start: 0}
        queue = deque([start])
        edges = set()
        while queue:
            x, y = queue.popleft()
            for label in range(g1.alphabet.size):
                for sign in (1, -1):
                    s1 = g1.successor(x, label, sign)
                    s2 = g2.successor(y, label, sign)
                    if s1 is None or s2 is None:
                        continue
                    pair = (s1[0], s2[0])
                    if pair not in number:
                        number[pair] = len(number)
                        queue.append(pair)
                    u, v = number[(x, y)], number[pair]
                    edges.add((u, label, v) if sign > 0 else (v, label, u))
        raw = RawGraph(g1.alphabet, len(number))
        for e in sorted(edges):
            raw.addEdge(*e)
        return raw.fold()

    @staticmethod
    def join(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
        """
        Compute the subgroup generated by two subgroups by folding the wedge of their graphs.

        Parameters
        ----------
        g1 : LabeledGraph
            The graph of the first subgroup.
        g2 : LabeledGraph
            The graph of the second subgroup.

        Returns
        -------
        graph : LabeledGraph
            The graph of the join.
        """
        raw = RawGraph(g1.alphabet)
        raw.wedge(g1)
        raw.wedge(g2)
        return raw.fold()

    @classmethod
    def joinAll(cls, graphs: Iterable[LabeledGraph], alphabet: Optional[Alphabet] = None) -> LabeledGraph:
        """
        Join any number of subgroups. The join of no subgroups is the trivial subgroup over the given alphabet.
        """
        graphs = list(graphs)
        if len(graphs) == 0:
            if alphabet is None:
                raise ValueError("The alphabet of an empty join must be given.")
            return LabeledGraph.trivial(alphabet)
        raw = RawGraph(graphs[0].alphabet)
        for g in graphs:
            raw.wedge(g)
        return raw.fold()

    @classmethod
    def intersectAll(cls, graphs: Iterable[LabeledGraph], alphabet: Optional[Alphabet] = None) -> LabeledGraph:
        """
        Intersect any number of subgroups. The intersection of no subgroups is the whole free group.
        """
        graphs = list(graphs)
        if len(graphs) == 0:
            if alphabet is None:
                raise ValueError("The alphabet of an empty intersection must be given.")
            return LabeledGraph.free(alphabet)
        return reduce(cls.intersect, graphs)
