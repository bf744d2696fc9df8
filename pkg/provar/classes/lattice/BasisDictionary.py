from typing import Dict, List
from ..Alphabet import Alphabet
from ..LabeledGraph import LabeledGraph, RawGraph
from ..SchreierData import SchreierData
from ..Word import Word
from ...lib.exceptions import NotAMember


class BasisDictionary:
    """
    Identification of a subgroup K of F(A) with the free group on its Schreier basis. The basis element of the k-th
    non-tree edge (in edge id order) is named x(k+1).
    """

    def __init__(self, ambient: SchreierData, prefix: str = "x"):
        """
        Initialize a new basis dictionary

        Parameters
        ----------
        ambient : SchreierData
            The Schreier data of the subgroup K.
        prefix : str
            The prefix of the fresh symbols.
        """
        self.ambient = ambient
        self.edge_ids = sorted(ambient.basis)
        self.symbols = Alphabet.fresh(len(self.edge_ids), prefix)
        self._symbol_of: Dict[int, int] = {e: k for k, e in enumerate(self.edge_ids)}
        self.to_ambient: Dict[str, Word] = {self.symbols.symbol(k): ambient.basis[e]
                                            for k, e in enumerate(self.edge_ids)}

    @classmethod
    def fromGraph(cls, graph: LabeledGraph) -> "BasisDictionary":
        return cls(SchreierData(graph))

    @property
    def rank(self) -> int:
        return len(self.edge_ids)

    def image(self, k: int) -> Word:
        return self.ambient.basis[self.edge_ids[k]]

    def rewrite(self, word: Word) -> Word:
        """
        Rewrite a member of K in the Schreier basis by tracing it through the graph of K and recording the crossed
        non-tree edges.

        Parameters
        ----------
        word : Word
            A word over A representing a member of K.

        Returns
        -------
        res : Word
            The word over the fresh symbols.
        """
        graph = self.ambient.graph
        path = graph.trace(word, graph.base)
        if path is None or (len(path) > 0 and path[-1][2] != graph.base):
            raise NotAMember("The word '" + str(word) + "' is not a member of the subgroup.")
        return Word(self.symbols, [(self._symbol_of[edge], sign) for edge, sign, _ in path
                                   if edge in self._symbol_of])

    def substitute(self, word: Word) -> Word:
        """
        Map a word over the fresh symbols to its value in F(A).
        """
        res = Word.identity(self.ambient.graph.alphabet)
        for k, sign in word.letters:
            res = res * self.image(k).power(sign)
        return res

    def rewriteGraph(self, graph: LabeledGraph) -> LabeledGraph:
        """
        Express a subgroup H of K as subgroup of the free group on the Schreier basis of K.

        Parameters
        ----------
        graph : LabeledGraph
            The graph of H over A.

        Returns
        -------
        res : LabeledGraph
            The graph of H over the fresh symbols.
        """
        return LabeledGraph.fromGenerators(self.rewriteWords(graph.generators()), self.symbols)

    def rewriteWords(self, words: List[Word]) -> List[Word]:
        return [self.rewrite(w) for w in words]

    def blowUp(self, graph: LabeledGraph) -> LabeledGraph:
        """
        Carry a subgroup of the free group on the basis back to F(A): every edge is replaced by a subdivided path
        labeled by the image of its symbol and the result is folded.

        Parameters
        ----------
        graph : LabeledGraph
            A graph over the fresh symbols.

        Returns
        -------
        res : LabeledGraph
            The graph of the image subgroup over A.
        """
        graph.checkAlphabet(self.symbols)
        if self.rank == 0 and len(graph.edges) > 0:
            raise ValueError("The trivial subgroup has no basis symbols.")
        raw = RawGraph(self.ambient.graph.alphabet, graph.vertex_count, graph.base)
        for u, k, v in graph.edges:
            raw.addPath(u, self.image(k), v)
        return raw.fold()
