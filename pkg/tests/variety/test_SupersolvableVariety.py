from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.LabeledGraph import LabeledGraph
from provar.classes.variety.ClosureResult import SOUND_UPPER
from provar.classes.variety.AbelianVariety import AbelianVariety
from provar.classes.variety.HpVariety import HpVariety
from provar.classes.variety.NilpotentVariety import NilpotentVariety
from provar.classes.variety.PrimePolicy import PrimePolicy
from provar.classes.variety.SupersolvableVariety import SupersolvableVariety


class TestSupersolvableVariety(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")
        self.variety = SupersolvableVariety()

    def graph(self, texts: str) -> LabeledGraph:
        return LabeledGraph.fromStrings(texts, self.alphabet)

    def test_factor(self):
        self.assertIsInstance(self.variety.factor(3), HpVariety)

    def test_isDense(self):
        small = SupersolvableVariety(PrimePolicy([2, 3], 1, 5))
        self.assertTrue(small.isDense(LabeledGraph.free(self.alphabet)))
        self.assertFalse(small.isDense(self.graph("aa,b")))
        self.assertFalse(small.isDense(self.graph("aaa,b")))

    def test_calcClosure(self):
        closure = self.variety.calcClosure(self.graph("aaa"))
        self.assertEqual(closure.status, SOUND_UPPER)
        self.assertEqual(closure.graph, self.graph("aaa"))
        self.assertEqual(closure.primes_used, [2, 3, 5, 7, 11])
        self.assertEqual(self.variety.closures[2].graph, self.graph("a"))
        self.assertEqual(self.variety.closures[3].graph, self.graph("aaa"))
        for c in self.variety.closures.values():
            self.assertTrue(closure.graph <= c.graph)

    def test_calcClosure_generators(self):
        h = self.graph("baB,bbA")
        closure = self.variety.calcClosure(h)
        self.assertEqual(closure.graph, h)
        self.assertEqual(closure.primes_used, [2, 3, 5, 7])
        self.assertEqual(set(self.variety.closures), {2})
        self.assertEqual(len(closure.generators()), 2)

    def test_chain(self):
        nil = NilpotentVariety()
        abelian = AbelianVariety(6)
        for texts in ("aaa", "aa", "baB,bbA", "aa,b"):
            graph = self.graph(texts)
            su = self.variety.calcClosure(graph).graph
            self.assertTrue(graph <= su <= nil.calcClosure(graph).graph <= abelian.calcClosure(graph).graph)
            self.assertEqual(self.variety.calcClosure(su).graph, su)
