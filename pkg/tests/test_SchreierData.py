from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.LabeledGraph import LabeledGraph
from provar.classes.SchreierData import SchreierData
from provar.classes.Word import Word
from provar.lib.exceptions import NotASpanningTree


class TestSchreierData(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")
        self.cube = LabeledGraph.fromStrings("aaa", self.alphabet)
        self.graph = LabeledGraph.fromStrings("abAb,BAbAb,AB,BabbbAb", self.alphabet)

    def words(self, texts):
        return Word.parseList(texts, self.alphabet)

    def test___init__(self):
        data = SchreierData(self.cube)
        self.assertEqual(data.tree, frozenset({0, 2}))
        self.assertEqual([str(w) for w in data.transversalWords()], ["1", "a", "A"])
        self.assertEqual(data.basisWords(), self.words(["aaa"]))
        self.assertEqual(data.rank(), 1)
        with self.assertRaises(NotASpanningTree):
            SchreierData(self.cube, [0])
        with self.assertRaises(NotASpanningTree):
            SchreierData(self.cube, [0, 1, 2])

    def test_spanningTree(self):
        self.assertEqual(SchreierData.spanningTree(self.cube, "dfs"), frozenset({0, 1}))
        data = SchreierData(self.cube, SchreierData.spanningTree(self.cube, "dfs"))
        self.assertEqual([str(w) for w in data.transversalWords()], ["1", "a", "aa"])
        self.assertEqual(data.basisWords(), self.words(["aaa"]))
        with self.assertRaises(ValueError):
            SchreierData.spanningTree(self.cube, "random")
        self.assertEqual(SchreierData.spanningTree(LabeledGraph.trivial(self.alphabet)), frozenset())

    def test_spanningTrees(self):
        self.assertEqual(len(list(SchreierData.spanningTrees(self.cube))), 3)
        for tree in SchreierData.spanningTrees(self.graph):
            self.assertTrue(SchreierData.isSpanningTree(self.graph, tree))

    def test_basis(self):
        # the basis is a free basis of the subgroup for every spanning tree
        for tree in SchreierData.spanningTrees(self.graph):
            basis = SchreierData(self.graph, tree).basisWords()
            self.assertEqual(len(basis), 4)
            self.assertTrue(all(self.graph.contains(w) for w in basis))
            self.assertEqual(LabeledGraph.fromGenerators(basis, self.alphabet), self.graph)

    def test_printed_basis(self):
        wanted = set(self.words(["abAb", "BaBab", "BabbbAb", "ba"]))
        bases = [set(SchreierData(self.graph, tree).basisWords()) for tree in SchreierData.spanningTrees(self.graph)]
        self.assertIn(wanted, bases)
        self.assertTrue(all(self.graph.contains(w) for w in wanted))

    def test_toNetworkx(self):
        g = SchreierData.toNetworkx(self.graph)
        self.assertEqual(g.number_of_nodes(), 6)
        self.assertEqual(g.number_of_edges(), 9)

    def test_toJson(self):
        data = SchreierData(self.cube).toJson()
        self.assertEqual(data, {"tree": [0, 2], "transversal": ["1", "a", "A"], "basis": ["aaa"]})
