from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.LabeledGraph import LabeledGraph
from provar.classes.modlin.MagnusQuotient import MagnusQuotient
from provar.classes.variety.HpVariety import HpVariety
from provar.classes.variety.PGroupVariety import PGroupVariety
from provar.classes.variety.VarietySpec import VarietySpec


class TestHpVariety(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")

    def graph(self, texts: str) -> LabeledGraph:
        return LabeledGraph.fromStrings(texts, self.alphabet)

    def test_layer(self):
        self.assertEqual(HpVariety(3).layer(self.graph("a")), LabeledGraph.cayley(2, self.alphabet))

    def test_isDense(self):
        variety = HpVariety(3, cross_check=True)
        self.assertTrue(variety.isDense(LabeledGraph.free(self.alphabet)))
        self.assertTrue(variety.isDense(self.graph("ab,b")))
        self.assertFalse(variety.isDense(self.graph("aa,b")))
        self.assertFalse(variety.isDense(self.graph("aaa,b")))
        self.assertTrue(HpVariety(2).isDense(self.graph("aaa,b")))
        self.assertFalse(HpVariety(2).isDense(self.graph("aa,b")))

    def test_calcClosure(self):
        closure = HpVariety(3).calcClosure(self.graph("aaa"))
        self.assertEqual(closure.variety, VarietySpec("hp", 3))
        self.assertEqual(closure.graph, self.graph("aaa"))
        self.assertEqual(HpVariety(5).calcClosure(self.graph("aaa")).graph, self.graph("a"))
        self.assertEqual(HpVariety(3, cross_check=True).calcClosure(self.graph("aa")).graph, self.graph("aa"))
        self.assertEqual(HpVariety(2).calcClosure(self.graph("aa")).graph,
                         PGroupVariety(2).calcClosure(self.graph("aa")).graph)

    def test_calcClosure_generators(self):
        h = self.graph("baB,bbA")
        for p in (3, 5, 7):
            closure = HpVariety(p).calcClosure(h)
            self.assertEqual(closure.graph, h)
            self.assertTrue(closure.graph <= self.graph("a,bb,baB"))

    def test_isDense_index5(self):
        graph = self.graph("a,bbbbb,baB,bbaBB,bbbaBBB,bbbbaBBBB")
        self.assertEqual(graph.index(), 5)
        self.assertTrue(HpVariety(3, cross_check=True).isDense(graph))
        self.assertTrue(MagnusQuotient(3, 2).isFullImage(graph.generators()))
        self.assertFalse(HpVariety(5).isDense(graph))

    def test_calcClosure_idempotent(self):
        for texts in ("aaa", "aa", "baB,bbA", "aa,b"):
            for p in (3, 5):
                closure = HpVariety(p).calcClosure(self.graph(texts)).graph
                self.assertTrue(self.graph(texts) <= closure)
                self.assertEqual(HpVariety(p).calcClosure(closure).graph, closure)
