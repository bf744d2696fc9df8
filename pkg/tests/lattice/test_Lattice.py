from unittest import TestCase
import random
from provar.classes.Alphabet import Alphabet
from provar.classes.LabeledGraph import LabeledGraph
from provar.classes.Word import Word
from provar.classes.lattice.Lattice import Lattice
from provar.lib.exceptions import AlphabetMismatch


class TestLattice(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")

    def graph(self, texts: str) -> LabeledGraph:
        return LabeledGraph.fromStrings(texts, self.alphabet)

    def test_intersect(self):
        self.assertEqual(Lattice.intersect(self.graph("aa"), self.graph("aaa")), self.graph("aaaaaa"))
        self.assertEqual(Lattice.intersect(self.graph("a"), self.graph("b")), LabeledGraph.trivial(self.alphabet))
        folded = self.graph("baB,bbA")
        self.assertEqual(Lattice.intersect(folded, LabeledGraph.free(self.alphabet)), folded)
        self.assertEqual(Lattice.intersect(LabeledGraph.cayley(2, self.alphabet), LabeledGraph.cayley(3, self.alphabet)),
                         LabeledGraph.cayley(6, self.alphabet))
        with self.assertRaises(AlphabetMismatch):
            Lattice.intersect(self.graph("a"), LabeledGraph.fromStrings("a", Alphabet("abc")))

    def test_intersect_membership(self):
        rng = random.Random(7)
        for _ in range(40):
            gens = [[Word(self.alphabet, [(rng.randrange(2), rng.choice((1, -1))) for _ in range(rng.randint(1, 6))])
                     for _ in range(rng.randint(1, 3))] for _ in range(2)]
            h = LabeledGraph.fromGenerators(gens[0], self.alphabet)
            k = LabeledGraph.fromGenerators(gens[1], self.alphabet)
            meet = Lattice.intersect(h, k)
            self.assertTrue(meet <= h and meet <= k)
            for w in gens[0] + gens[1]:
                self.assertEqual(meet.contains(w), h.contains(w) and k.contains(w))
            for w in meet.generators():
                self.assertTrue(h.contains(w) and k.contains(w))

    def test_join(self):
        self.assertEqual(Lattice.join(self.graph("aa"), self.graph("aaa")), self.graph("a"))
        self.assertEqual(Lattice.join(self.graph("baB"), self.graph("bbA")), self.graph("baB,bbA"))
        self.assertEqual(Lattice.join(self.graph("a"), LabeledGraph.trivial(self.alphabet)), self.graph("a"))

    def test_joinAll(self):
        self.assertEqual(Lattice.joinAll([], self.alphabet), LabeledGraph.trivial(self.alphabet))
        self.assertEqual(Lattice.joinAll([self.graph("a"), self.graph("b"), self.graph("ab")]),
                         LabeledGraph.free(self.alphabet))
        with self.assertRaises(ValueError):
            Lattice.joinAll([])

    def test_intersectAll(self):
        self.assertEqual(Lattice.intersectAll([], self.alphabet), LabeledGraph.free(self.alphabet))
        self.assertEqual(Lattice.intersectAll([self.graph("aa"), self.graph("aaa"), self.graph("a")]),
                         self.graph("aaaaaa"))
