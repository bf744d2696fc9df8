from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional
import networkx as nx
from .LabeledGraph import LabeledGraph
from .Word import Word
from ..lib.exceptions import NotASpanningTree


class SchreierData:
    """
    The Schreier transversal and the Schreier basis of a subgroup defined by a spanning tree of its reduced graph.
    """

    def __init__(self, graph: LabeledGraph, tree: Optional[Iterable[int]] = None):
        """
        Initialize the Schreier data of a graph

        Parameters
        ----------
        graph : LabeledGraph
            The reduced graph of the subgroup.
        tree : Iterable[int]
            The edge ids of a spanning tree. The BFS spanning tree is used if not given.
        """
        self.graph = graph
        self.tree = frozenset(self.spanningTree(graph) if tree is None else tree)
        if not self.isSpanningTree(graph, self.tree):
            raise NotASpanningTree("The edges " + str(sorted(self.tree)) + " do not form a spanning tree.")
        self.transversal = self.__calcTransversal()
        self.basis: Dict[int, Word] = {}
        for i, (u, label, v) in enumerate(graph.edges):
            if i not in self.tree:
                self.basis[i] = self.transversal[u] * Word(graph.alphabet, [(label, 1)]) * ~self.transversal[v]

    def __calcTransversal(self) -> Dict[int, Word]:
        alphabet = self.graph.alphabet
        transversal = {self.graph.base: Word.identity(alphabet)}
        queue = deque([self.graph.base])
        while queue:
            v = queue.popleft()
            for label in range(alphabet.size):
                for sign in (1, -1):
                    step = self.graph.successor(v, label, sign)
                    if step is not None and step[1] in self.tree and step[0] not in transversal:
                        transversal[step[0]] = transversal[v] * Word(alphabet, [(label, sign)])
                        queue.append(step[0])
        return transversal

    @staticmethod
    def toNetworkx(graph: LabeledGraph, edges: Optional[Iterable[int]] = None) -> nx.MultiGraph:
        """
        Convert (a subset of the edges of) a labeled graph to an undirected networkx multigraph.

        Parameters
        ----------
        graph : LabeledGraph
            The graph to convert.
        edges : Iterable[int]
            The ids of the edges to keep. All edges are kept if not given.

        Returns
        -------
        g : MultiGraph
            The undirected multigraph with the edge ids as keys.
        """
        g = nx.MultiGraph()
        g.add_nodes_from(range(graph.vertex_count))
        ids = range(len(graph.edges)) if edges is None else edges
        for i in ids:
            u, label, v = graph.edges[i]
            g.add_edge(u, v, key=i, label=label)
        return g

    @classmethod
    def isSpanningTree(cls, graph: LabeledGraph, tree: Iterable[int]) -> bool:
        tree = list(tree)
        if any(not 0 <= i < len(graph.edges) for i in tree):
            return False
        return nx.is_tree(cls.toNetworkx(graph, tree))

    @staticmethod
    def spanningTree(graph: LabeledGraph, strategy: str = "bfs") -> FrozenSet[int]:
        """
        Compute a spanning tree by exploring the graph from the base vertex by ascending label, outgoing edges before
        incoming edges.

        Parameters
        ----------
        graph : LabeledGraph
            The graph to span.
        strategy : str
            The search strategy, either 'bfs' or 'dfs'.

        Returns
        -------
        tree : FrozenSet[int]
            The edge ids of the tree.
        """
        if strategy not in ("bfs", "dfs"):
            raise ValueError("Unknown spanning tree strategy '" + strategy + "'.")
        tree = set()
        seen = set()
        # entries are (vertex, edge used to reach it)
        todo = deque([(graph.base, None)])
        while todo:
            v, edge = todo.popleft() if strategy == "bfs" else todo.pop()
            if v in seen:
                continue
            seen.add(v)
            if edge is not None:
                tree.add(edge)
            steps = [graph.successor(v, label, sign) for label in range(graph.alphabet.size) for sign in (1, -1)]
            steps = [s for s in steps if s is not None and s[0] not in seen]
            if strategy == "dfs":
                steps.reverse()
            todo.extend(steps)
        return frozenset(tree)

    @classmethod
    def spanningTrees(cls, graph: LabeledGraph) -> Iterator[FrozenSet[int]]:
        """
        Enumerate all spanning trees of a graph.

        Parameters
        ----------
        graph : LabeledGraph
            The graph to span.

        Yields
        ------
        tree : FrozenSet[int]
            The edge ids of a spanning tree, in lexicographic order of the sorted id lists.
        """
        candidates = [i for i, (u, _, v) in enumerate(graph.edges) if u != v]
        for tree in combinations(candidates, graph.vertex_count - 1):
            if nx.is_tree(cls.toNetworkx(graph, tree)):
                yield frozenset(tree)

    def basisWords(self) -> List[Word]:
        """
        The basis words ordered by the id of their non-tree edge.
        """
        return [self.basis[i] for i in sorted(self.basis)]

    def transversalWords(self) -> List[Word]:
        """
        The transversal words ordered by vertex.
        """
        return [self.transversal[v] for v in range(self.graph.vertex_count)]

    def rank(self) -> int:
        return len(self.basis)

    def toJson(self) -> dict:
        return {"tree": sorted(self.tree),
                "transversal": [str(w) for w in self.transversalWords()],
                "basis": [str(w) for w in self.basisWords()]}
