import random
from collections import deque
from typing import Dict, Iterable, List, Optional, Tuple, Union
import numpy as np
from .Alphabet import Alphabet
from .Word import Word
from ..lib.exceptions import AlphabetMismatch
from ..lib.helpers import readSubgroupFile, splitWords
from ..lib.logger import logger

Edge = Tuple[int, int, int]

# index of a subgroup of infinite index
INFINITE = None


class LabeledGraph:
    """
    A reduced A-labeled graph with base vertex (Stallings automaton), the canonical representation of a finitely
    generated subgroup of the free group F(A). Instances are immutable and always in canonical form: the vertices are
    numbered by a breadth first search from the base vertex which explores the edges of each vertex by ascending label,
    outgoing edges before incoming edges. Two graphs represent the same subgroup iff they are equal.
    """

    def __init__(self, alphabet: Alphabet, vertex_count: int, edges: Iterable[Edge], base: int = 0):
        """
        Initialize a new labeled graph. The given graph must be reduced and is renumbered to canonical form.

        Parameters
        ----------
        alphabet : Alphabet
            The alphabet of the edge labels.
        vertex_count : int
            The number of vertices, the vertices are 0, ..., vertex_count - 1.
        edges : Iterable[Tuple[int, int, int]]
            The edges as triples (origin, label index, terminus).
        base : int
            The base vertex.
        """
        self.alphabet = alphabet
        edges = set(tuple(int(x) for x in e) for e in edges)
        if vertex_count < 1 or not 0 <= base < vertex_count:
            raise ValueError("A labeled graph needs at least one vertex and a valid base vertex.")
        for u, label, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count and 0 <= label < alphabet.size):
                raise ValueError("Invalid edge (%d, %d, %d)." % (u, label, v))
        out_map, in_map = {}, {}
        degree = [0] * vertex_count
        for u, label, v in edges:
            if (u, label) in out_map or (v, label) in in_map:
                raise ValueError("The graph is not reduced: label '" + alphabet.symbol(label) +
                                 "' is not (co)deterministic.")
            out_map[(u, label)] = v
            in_map[(v, label)] = u
            degree[u] += 1
            degree[v] += 1
        for v in range(vertex_count):
            if v != base and degree[v] < 2:
                raise ValueError("The graph is not reduced: vertex %d has valence %d." % (v, degree[v]))
        order = self.__bfsOrder(alphabet.size, vertex_count, base, out_map, in_map)
        if len(order) != vertex_count:
            raise ValueError("The graph is not connected.")
        number = {v: i for i, v in enumerate(order)}
        self.vertex_count = vertex_count
        self.base = 0
        self.edges = tuple(sorted((number[u], label, number[v]) for u, label, v in edges))
        self._out: List[Dict[int, Tuple[int, int]]] = [dict() for _ in range(vertex_count)]
        self._in: List[Dict[int, Tuple[int, int]]] = [dict() for _ in range(vertex_count)]
        for i, (u, label, v) in enumerate(self.edges):
            self._out[u][label] = (v, i)
            self._in[v][label] = (u, i)

    @staticmethod
    def __bfsOrder(n_labels: int, vertex_count: int, base: int, out_map: dict, in_map: dict) -> List[int]:
        order = [base]
        seen = {base}
        queue = deque([base])
        while queue:
            v = queue.popleft()
            for label in range(n_labels):
                for w in (out_map.get((v, label)), in_map.get((v, label))):
                    if w is not None and w not in seen:
                        seen.add(w)
                        order.append(w)
                        queue.append(w)
        return order

    # ------------------------------------------------------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------------------------------------------------------
    @classmethod
    def trivial(cls, alphabet: Alphabet) -> "LabeledGraph":
        """
        The graph of the trivial subgroup: a single vertex without edges.
        """
        return cls(alphabet, 1, [])

    @classmethod
    def free(cls, alphabet: Alphabet) -> "LabeledGraph":
        """
        The graph of the whole free group: a bouquet of one loop per symbol.
        """
        return cls(alphabet, 1, [(0, i, 0) for i in range(alphabet.size)])

    @classmethod
    def fromGenerators(cls, gens: Iterable[Word], alphabet: Alphabet, rng: Optional[random.Random] = None) -> \
            "LabeledGraph":
        """
        Construct the reduced graph of the subgroup generated by some words: wedge the subdivided circles labeled by
        the generators at the base vertex and fold.

        Parameters
        ----------
        gens : Iterable[Word]
            The generators. Trivial words are ignored.
        alphabet : Alphabet
            The alphabet of the generators.
        rng : Random
            Optional random number generator to shuffle the order of the identifications.

        Returns
        -------
        graph : LabeledGraph
            The canonical reduced graph of the generated subgroup.
        """
        raw = RawGraph(alphabet)
        for w in gens:
            raw.addWord(w)
        return raw.fold(rng)

    @classmethod
    def fromStrings(cls, texts: Union[str, Iterable[str]], alphabet: Alphabet, allow_exponents: bool = False) -> \
            "LabeledGraph":
        """
        Construct the graph of a subgroup given by words in text format.

        Parameters
        ----------
        texts : Union[str, Iterable[str]]
            The generators, either as comma-separated list or as iterable of words.
        alphabet : Alphabet
            The alphabet of the generators.
        allow_exponents : bool
            Accept the exponent sugar 'a^k'.

        Returns
        -------
        graph : LabeledGraph
            The canonical reduced graph of the generated subgroup.
        """
        if isinstance(texts, str):
            texts = splitWords(texts)
        return cls.fromGenerators(Word.parseList(texts, alphabet, allow_exponents), alphabet)

    @classmethod
    def fromFile(cls, file: str, alphabet: Alphabet, allow_exponents: bool = False) -> List["LabeledGraph"]:
        """
        Read subgroups from a file with one subgroup per line.

        Parameters
        ----------
        file : str
            Path to the file. Each line contains comma-separated words, '#' starts a comment.
        alphabet : Alphabet
            The alphabet of the words.
        allow_exponents : bool
            Accept the exponent sugar 'a^k'.

        Returns
        -------
        graphs : List[LabeledGraph]
            The graphs of the subgroups in the order of the file.
        """
        return [cls.fromStrings(line, alphabet, allow_exponents) for line in readSubgroupFile(file)]

    @classmethod
    def cayley(cls, d: int, alphabet: Alphabet) -> "LabeledGraph":
        """
        Create the Cayley graph of (Z/dZ)^n with respect to the standard generators. The graph represents the kernel
        N_d = [F, F]F^d of the abelianisation modulo d.

        Parameters
        ----------
        d : int
            The modulus (d >= 1).
        alphabet : Alphabet
            The alphabet of size n.

        Returns
        -------
        graph : LabeledGraph
            The complete graph with d^n vertices.
        """
        if d < 1:
            raise ValueError("The modulus must be positive.")
        n = alphabet.size
        vertex_count = d ** n
        # mixed radix numbering, the first symbol is the least significant digit
        edges = []
        for v in range(vertex_count):
            digits = np.array([(v // d ** i) % d for i in range(n)])
            for i in range(n):
                w = digits.copy()
                w[i] = (w[i] + 1) % d
                edges.append((v, i, int(sum(int(x) * d ** k for k, x in enumerate(w)))))
        return cls(alphabet, vertex_count, edges)

    @classmethod
    def fromJson(cls, data: dict) -> "LabeledGraph":
        """
        Create a graph from its JSON representation. The graph is folded, so (co)determinism is not required.

        Parameters
        ----------
        data : dict
            The decoded JSON object with the keys 'alphabet', 'vertices', 'base' and 'edges'.

        Returns
        -------
        graph : LabeledGraph
            The canonical reduced graph.
        """
        alphabet = Alphabet(data["alphabet"])
        raw = RawGraph(alphabet, int(data["vertices"]), int(data.get("base", 0)))
        for edge in data["edges"]:
            raw.addEdge(int(edge["from"]), alphabet.index(edge["label"]), int(edge["to"]))
        return raw.fold()

    # ------------------------------------------------------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return isinstance(other, LabeledGraph) and self.alphabet == other.alphabet and \
            self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.alphabet, self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return "LabeledGraph(alphabet=%s, base=%d, vertices=%d, edges=[%s])" % (
            repr(self.alphabet), self.base, self.vertex_count,
            ", ".join("%s:%d->%d" % (self.alphabet.symbol(l), u, v) for u, l, v in self.edges))

    def checkAlphabet(self, alphabet: Alphabet):
        if self.alphabet != alphabet:
            raise AlphabetMismatch("Alphabets '" + str(self.alphabet) + "' and '" + str(alphabet) + "' differ.")

    def successor(self, v: int, index: int, sign: int) -> Optional[Tuple[int, int]]:
        """
        Follow a signed letter from a vertex.

        Parameters
        ----------
        v : int
            The start vertex.
        index : int
            The label index.
        sign : int
            +1 to follow an outgoing edge, -1 to follow an incoming edge backwards.

        Returns
        -------
        step : Optional[Tuple[int, int]]
            The reached vertex and the id of the used edge or None if there is no such edge.
        """
        return self._out[v].get(index) if sign > 0 else self._in[v].get(index)

    def trace(self, word: Word, start: int = 0) -> Optional[List[Tuple[int, int, int]]]:
        """
        Trace a word through the graph.

        Parameters
        ----------
        word : Word
            The word to trace.
        start : int
            The start vertex.

        Returns
        -------
        path : Optional[List[Tuple[int, int, int]]]
            The visited steps as triples (edge id, sign, reached vertex) or None if a transition is missing.
        """
        self.checkAlphabet(word.alphabet)
        path = []
        v = start
        for index, sign in word.letters:
            step = self.successor(v, index, sign)
            if step is None:
                return None
            v, edge = step
            path.append((edge, sign, v))
        return path

    def contains(self, word: Word) -> bool:
        """
        Decide the membership of a word in the subgroup of the graph. A reduced word lies in the subgroup iff it
        labels a closed path at the base vertex.

        Parameters
        ----------
        word : Word
            The word to check.

        Returns
        -------
        member : bool
            True if the word is a member of the subgroup.
        """
        path = self.trace(word, self.base)
        if path is None:
            return False
        return (path[-1][2] if len(path) > 0 else self.base) == self.base

    def __contains__(self, word: Word) -> bool:
        return self.contains(word)

    def rank(self) -> int:
        """
        The rank of the represented (free) subgroup, |E| - |V| + 1.
        """
        return len(self.edges) - self.vertex_count + 1

    def isComplete(self) -> bool:
        """
        Check whether every vertex has an incoming and an outgoing edge for every label.
        """
        n = self.alphabet.size
        return all(len(self._out[v]) == n and len(self._in[v]) == n for v in range(self.vertex_count))

    def index(self) -> Optional[int]:
        """
        The index of the represented subgroup in F(A).

        Returns
        -------
        index : Optional[int]
            The number of vertices if the graph is complete, INFINITE otherwise.
        """
        return self.vertex_count if self.isComplete() else INFINITE

    def degree(self, v: int) -> int:
        return len(self._out[v]) + len(self._in[v])

    def generators(self) -> List[Word]:
        """
        The Schreier basis of the subgroup with respect to the BFS spanning tree, ordered by edge id.
        """
        from .SchreierData import SchreierData
        return SchreierData(self).basisWords()

    def isSubgroupOf(self, other: "LabeledGraph") -> bool:
        from .GraphMorphism import GraphMorphism
        return GraphMorphism.find(self, other) is not None

    def __le__(self, other: "LabeledGraph") -> bool:
        return self.isSubgroupOf(other)

    def __ge__(self, other: "LabeledGraph") -> bool:
        return other.isSubgroupOf(self)

    def isFreeFactorOf(self, other: "LabeledGraph") -> bool:
        """
        Check whether the subgroup is a free factor of another subgroup certified by an injective morphism (the
        graph is a subgraph of the graph of the other subgroup).

        Parameters
        ----------
        other : LabeledGraph
            The graph of the overgroup.

        Returns
        -------
        res : bool
            True if the morphism into the other graph exists and is injective.
        """
        from .GraphMorphism import GraphMorphism
        morphism = GraphMorphism.find(self, other)
        return morphism is not None and morphism.injective

    def __and__(self, other: "LabeledGraph") -> "LabeledGraph":
        from .lattice.Lattice import Lattice
        return Lattice.intersect(self, other)

    def __or__(self, other: "LabeledGraph") -> "LabeledGraph":
        from .lattice.Lattice import Lattice
        return Lattice.join(self, other)

    # ------------------------------------------------------------------------------------------------------------------
    # Export
    # ------------------------------------------------------------------------------------------------------------------
    def toJson(self) -> dict:
        """
        The JSON representation of the graph.
        """
        return {"alphabet": list(self.alphabet.symbols), "vertices": self.vertex_count, "base": self.base,
                "edges": [{"from": u, "label": self.alphabet.symbol(l), "to": v} for u, l, v in self.edges]}

    def toDot(self, name: str = "G") -> str:
        """
        Render the graph in the DOT language. The base vertex is drawn as double circle.

        Parameters
        ----------
        name : str
            The name of the digraph.

        Returns
        -------
        dot : str
            The DOT source.
        """
        lines = ["digraph " + name + " {", "  rankdir=LR;"]
        for v in range(self.vertex_count):
            lines.append("  %d [shape=%s];" % (v, "doublecircle" if v == self.base else "circle"))
        for u, label, v in self.edges:
            lines.append('  %d -> %d [label="%s"];' % (u, v, self.alphabet.symbol(label)))
        lines.append("}")
        return "\n".join(lines) + "\n"


class RawGraph:
    """
    A mutable labeled graph with base vertex which may violate (co)determinism and reducedness. Used to build graphs
    which are then folded into a LabeledGraph.
    """

    def __init__(self, alphabet: Alphabet, vertex_count: int = 1, base: int = 0):
        self.alphabet = alphabet
        self.vertex_count = vertex_count
        self.base = base
        self.edges: List[Edge] = []
        self._merges: List[Tuple[int, int]] = []

    def addVertex(self) -> int:
        self.vertex_count += 1
        return self.vertex_count - 1

    def addEdge(self, u: int, label: int, v: int):
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count and 0 <= label < self.alphabet.size):
            raise ValueError("Invalid edge (%d, %d, %d)." % (u, label, v))
        self.edges.append((u, label, v))

    def addPath(self, start: int, word: Word, end: int):
        """
        Add a subdivided path from start to end labeled by a word. A trivial word identifies start and end.

        Parameters
        ----------
        start : int
            The first vertex of the path.
        word : Word
            The label of the path.
        end : int
            The last vertex of the path.
        """
        if word.alphabet != self.alphabet:
            raise AlphabetMismatch("Alphabets '" + str(self.alphabet) + "' and '" + str(word.alphabet) +
                                   "' differ.")
        if len(word) == 0:
            if start != end:
                self.merge(start, end)
            return
        v = start
        for k, (index, sign) in enumerate(word.letters):
            w = end if k == len(word) - 1 else self.addVertex()
            if sign > 0:
                self.addEdge(v, index, w)
            else:
                self.addEdge(w, index, v)
            v = w

    def addWord(self, word: Word):
        """
        Add a subdivided circle at the base vertex labeled by a word.
        """
        self.addPath(self.base, word, self.base)

    def wedge(self, graph: LabeledGraph) -> Dict[int, int]:
        """
        Glue a copy of a labeled graph to the base vertex.

        Parameters
        ----------
        graph : LabeledGraph
            The graph to add. Its base vertex is identified with the base vertex of this graph.

        Returns
        -------
        vertex_map : Dict[int, int]
            The vertices of the copy.
        """
        graph.checkAlphabet(self.alphabet)
        vertex_map = {graph.base: self.base}
        for v in range(graph.vertex_count):
            if v not in vertex_map:
                vertex_map[v] = self.addVertex()
        for u, label, v in graph.edges:
            self.addEdge(vertex_map[u], label, vertex_map[v])
        return vertex_map

    def merge(self, u: int, v: int):
        """
        Identify two vertices during the next fold.
        """
        self._merges.append((u, v))

    def fold(self, rng: Optional[random.Random] = None) -> LabeledGraph:
        """
        Fold the graph: identify equal-label edges sharing an origin or a terminus until the graph is (co)deterministic,
        drop the components not containing the base vertex and prune valence-1 vertices other than the base vertex.
        The result does not depend on the order of the identifications.

        Parameters
        ----------
        rng : Random
            Optional random number generator shuffling the order of the identifications.

        Returns
        -------
        graph : LabeledGraph
            The canonical reduced graph.
        """
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> bool:
            x, y = find(x), find(y)
            if x == y:
                return False
            if rng is not None and rng.random() < 0.5:
                x, y = y, x
            parent[y] = x
            return True

        merges = list(self._merges)
        if rng is not None:
            rng.shuffle(merges)
        for u, v in merges:
            union(u, v)
        edges = list(self.edges)
        passes = 0
        changed = True
        while changed:
            changed = False
            passes += 1
            if rng is not None:
                rng.shuffle(edges)
            out_map, in_map = {}, {}
            for u, label, v in edges:
                u, v = find(u), find(v)
                w = out_map.setdefault((u, label), v)
                if w != v and union(w, v):
                    changed = True
                w = in_map.setdefault((find(v), label), find(u))
                if w != find(u) and union(w, u):
                    changed = True
        base = find(self.base)
        folded = set((find(u), label, find(v)) for u, label, v in edges)

        # restrict to the component of the base vertex
        neighbours: Dict[int, List[int]] = {}
        for u, _, v in folded:
            neighbours.setdefault(u, []).append(v)
            neighbours.setdefault(v, []).append(u)
        component = {base}
        queue = deque([base])
        while queue:
            v = queue.popleft()
            for w in neighbours.get(v, []):
                if w not in component:
                    component.add(w)
                    queue.append(w)
        folded = set(e for e in folded if e[0] in component)

        # prune hanging trees
        degree = dict.fromkeys(component, 0)
        for u, _, v in folded:
            degree[u] += 1
            degree[v] += 1
        queue = deque(v for v in component if v != base and degree[v] < 2)
        removed = set()
        while queue:
            v = queue.popleft()
            if v in removed:
                continue
            removed.add(v)
            for e in [e for e in folded if e[0] == v or e[2] == v]:
                folded.discard(e)
                for w in (e[0], e[2]):
                    if w != v:
                        degree[w] -= 1
                        if w != base and degree[w] < 2 and w not in removed:
                            queue.append(w)
        vertices = sorted(component - removed)
        number = {v: i for i, v in enumerate(vertices)}
        logger.debug("Folded %d vertices and %d edges to %d vertices and %d edges in %d passes." % (
            self.vertex_count, len(self.edges), len(vertices), len(folded), passes))
        return LabeledGraph(self.alphabet, len(vertices), [(number[u], l, number[v]) for u, l, v in folded],
                            number[base])
