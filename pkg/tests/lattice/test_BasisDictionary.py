from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.LabeledGraph import LabeledGraph
from provar.classes.Word import Word
from provar.classes.lattice.BasisDictionary import BasisDictionary
from provar.lib.exceptions import NotAMember


class TestBasisDictionary(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")
        self.layer = LabeledGraph.cayley(2, self.alphabet)
        self.dictionary = BasisDictionary.fromGraph(self.layer)

    def word(self, text: str) -> Word:
        return Word.parse(text, self.alphabet)

    def test___init__(self):
        self.assertEqual(self.dictionary.rank, 5)
        self.assertEqual(self.dictionary.symbols, Alphabet.fresh(5))
        self.assertEqual(self.dictionary.to_ambient["x1"], self.word("aa"))
        self.assertEqual([str(self.dictionary.image(k)) for k in range(5)], ["aa", "baBA", "bb", "abaB", "abbA"])

    def test_rewrite(self):
        self.assertEqual(self.dictionary.rewrite(self.word("aaaaaa")), Word.parse("x1^3", self.dictionary.symbols))
        self.assertEqual(self.dictionary.rewrite(self.word("abAB")), Word.parse("x2^-1", self.dictionary.symbols))
        self.assertTrue(self.dictionary.rewrite(self.word("")).isIdentity())
        with self.assertRaises(NotAMember):
            self.dictionary.rewrite(self.word("a"))

    def test_substitute(self):
        for text in ("aaaaaa", "abAB", "bbaa", "baaBAA", "abbAbb"):
            w = self.word(text)
            self.assertEqual(self.dictionary.substitute(self.dictionary.rewrite(w)), w)

    def test_rewriteGraph(self):
        graph = self.dictionary.rewriteGraph(LabeledGraph.fromStrings("aaaaaa", self.alphabet))
        self.assertEqual(graph, LabeledGraph.fromGenerators([Word.parse("x1^3", self.dictionary.symbols)],
                                                            self.dictionary.symbols))

    def test_blowUp(self):
        graph = LabeledGraph.fromGenerators([Word.parse("x1^3", self.dictionary.symbols)], self.dictionary.symbols)
        self.assertEqual(self.dictionary.blowUp(graph), LabeledGraph.fromStrings("aaaaaa", self.alphabet))
        self.assertEqual(self.dictionary.blowUp(LabeledGraph.free(self.dictionary.symbols)), self.layer)
        h = LabeledGraph.fromStrings("abAB,bbaa", self.alphabet)
        self.assertEqual(self.dictionary.blowUp(self.dictionary.rewriteGraph(h)), h)

    def test_trivial(self):
        dictionary = BasisDictionary.fromGraph(LabeledGraph.trivial(self.alphabet))
        self.assertEqual(dictionary.rank, 0)
        self.assertEqual(dictionary.blowUp(LabeledGraph.trivial(dictionary.symbols)),
                         LabeledGraph.trivial(self.alphabet))
        with self.assertRaises(ValueError):
            dictionary.blowUp(LabeledGraph.free(dictionary.symbols))
