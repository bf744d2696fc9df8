from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.LabeledGraph import LabeledGraph
from provar.classes.variety.ClosureResult import SOUND_UPPER
from provar.classes.variety.NilpotentVariety import NilpotentVariety
from provar.classes.variety.PGroupVariety import PGroupVariety
from provar.classes.variety.PrimePolicy import PrimePolicy


class TestNilpotentVariety(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")
        self.variety = NilpotentVariety()

    def graph(self, texts: str) -> LabeledGraph:
        return LabeledGraph.fromStrings(texts, self.alphabet)

    def test_factor(self):
        self.assertIsInstance(self.variety.factor(5), PGroupVariety)
        self.assertEqual(self.variety.factor(5).p, 5)

    def test_isDense(self):
        self.assertTrue(self.variety.isDense(LabeledGraph.free(self.alphabet)))
        self.assertTrue(self.variety.isDense(self.graph("aab,ab")))
        self.assertFalse(self.variety.isDense(self.graph("aa,b")))
        self.assertFalse(self.variety.isDense(self.graph("a")))
        self.assertTrue(self.variety.isDense(self.graph("a,baBB,bbaB,bbb")))
        self.assertFalse(self.variety.isDense(self.graph("aa,bb,ab")))

    def test_calcClosure(self):
        closure = self.variety.calcClosure(self.graph("aa"))
        self.assertEqual(closure.status, SOUND_UPPER)
        self.assertEqual(closure.graph, self.graph("aa"))
        self.assertEqual(closure.primes_used, [2, 3, 5, 7])
        self.assertEqual(set(self.variety.closures), {2})
        closure = NilpotentVariety(PrimePolicy([2, 3], 1, 5)).calcClosure(self.graph("aaaaaa"))
        self.assertEqual(closure.graph, self.graph("aaaaaa"))
        self.assertEqual(closure.primes_used, [2, 3, 5])

    def test_exhausted(self):
        closure = NilpotentVariety(PrimePolicy([2, 3], 3, 5)).calcClosure(self.graph("aa"))
        self.assertEqual(closure.graph, self.graph("aa"))
        self.assertTrue(closure.certificates[0].startswith("PolicyExhausted"))

    def test_calcClosure_generators(self):
        h = self.graph("baB,bbA")
        self.assertEqual(self.variety.calcClosure(h).graph, h)
        self.assertEqual(self.variety.calcClosure(self.graph("aa,b")).graph, self.graph("aa,b"))
        self.assertEqual(set(self.variety.closures), {2})
