from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.GraphMorphism import GraphMorphism
from provar.classes.LabeledGraph import LabeledGraph
from provar.lib.exceptions import AlphabetMismatch


class TestGraphMorphism(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")

    def graph(self, texts: str) -> LabeledGraph:
        return LabeledGraph.fromStrings(texts, self.alphabet)

    def test_find(self):
        morphism = GraphMorphism.find(self.graph("aa"), self.graph("a"))
        self.assertIsNotNone(morphism)
        self.assertEqual(morphism.vertex_map, {0: 0, 1: 0})
        self.assertEqual(set(morphism.edge_map.values()), {0})
        self.assertFalse(morphism.injective)
        self.assertTrue(morphism.surjective)
        self.assertIsNone(GraphMorphism.find(self.graph("a"), self.graph("aa")))
        with self.assertRaises(AlphabetMismatch):
            GraphMorphism.find(self.graph("a"), LabeledGraph.fromStrings("a", Alphabet("abc")))

    def test_injective(self):
        morphism = GraphMorphism.find(self.graph("abbAb,abba"), self.graph("bAbbbb,abbbb,Abb,BBAb"))
        self.assertIsNotNone(morphism)
        self.assertTrue(morphism.injective)
        morphism = GraphMorphism.find(self.graph("a"), LabeledGraph.free(self.alphabet))
        self.assertTrue(morphism.injective)
        self.assertFalse(morphism.surjective)

    def test_surjective(self):
        morphism = GraphMorphism.find(self.graph("abbA,abaaBA,ababa"), self.graph("aa,abba,ababa"))
        self.assertIsNotNone(morphism)
        self.assertTrue(morphism.surjective)

    def test___init__(self):
        source, target = self.graph("aa"), self.graph("a")
        with self.assertRaises(ValueError):
            GraphMorphism(source, self.graph("b"), {0: 0, 1: 0})
        self.assertEqual(GraphMorphism(source, target, {0: 0, 1: 0}).toJson(),
                         {"vertex_map": [0, 0], "injective": False, "surjective": True})
