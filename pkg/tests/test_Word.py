from unittest import TestCase
import random
import numpy as np
from provar.classes.Alphabet import Alphabet
from provar.classes.Reproduction import randomWord
from provar.classes.Word import Word
from provar.lib.exceptions import AlphabetMismatch, UnknownSymbol


class TestWord(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")

    def word(self, text: str) -> Word:
        return Word.parse(text, self.alphabet)

    def test_parse(self):
        w = self.word("baB")
        self.assertEqual(len(w), 3)
        self.assertEqual(w.letters, ((1, 1), (0, 1), (1, -1)))
        self.assertTrue(self.word("").isIdentity())
        self.assertTrue(self.word("1").isIdentity())
        self.assertTrue(self.word("aBbA").isIdentity())
        self.assertEqual(Word.parse("a^3B^2", self.alphabet, allow_exponents=True), self.word("aaaBB"))
        self.assertEqual(Word.parse("a^-2", self.alphabet, allow_exponents=True), self.word("AA"))
        with self.assertRaises(UnknownSymbol):
            self.word("abc")

    def test_parseTokens(self):
        alphabet = Alphabet.fresh(2)
        w = Word.parse("x1*x2^-1*x2*x1^2", alphabet)
        self.assertEqual(w.letters, ((0, 1), (0, 1), (0, 1)))
        self.assertEqual(w.format(), "x1*x1*x1")
        self.assertEqual(w.format(exponents=True), "x1^3")

    def test_format(self):
        self.assertEqual(str(self.word("aaaBBa")), "aaaBBa")
        self.assertEqual(self.word("aaaBBa").format(exponents=True), "a^3B^2a")
        self.assertEqual(str(self.word("")), "1")

    def test_multiply(self):
        self.assertEqual(self.word("abA") * self.word("aBa"), self.word("aa"))
        self.assertEqual(self.word("ab").multiply(self.word("BA")), self.word(""))
        with self.assertRaises(AlphabetMismatch):
            self.word("a") * Word.parse("a", Alphabet("abc"))

    def test_invert(self):
        self.assertEqual(~self.word("abbA"), self.word("aBBA"))
        self.assertEqual(self.word("ab").invert(), self.word("BA"))
        w = self.word("baBaa")
        self.assertTrue((w * ~w).isIdentity())

    def test_group_laws(self):
        rng = random.Random(3)
        for _ in range(100):
            u, v, w = (randomWord(rng, self.alphabet) for _ in range(3))
            self.assertEqual(Word.parse(str(u), self.alphabet), u)
            self.assertEqual(Word.parse(u.format(exponents=True), self.alphabet, allow_exponents=True), u)
            self.assertEqual((u * v) * w, u * (v * w))
            self.assertEqual(~~u, u)
            self.assertEqual(~(u * v), ~v * ~u)
            self.assertTrue((u * ~u).isIdentity())

    def test_power(self):
        self.assertEqual(self.word("ab") ** 3, self.word("ababab"))
        self.assertEqual(self.word("aB").power(-2), self.word("bAbA"))
        self.assertTrue(self.word("ab").power(0).isIdentity())

    def test_conjugate(self):
        self.assertEqual(self.word("a").conjugate(self.word("b")), self.word("baB"))
        self.assertEqual(self.word("a").commutator(self.word("b")), self.word("abAB"))

    def test_exponentVector(self):
        w = self.word("aabAbbb")
        self.assertTrue((w.exponentVector() == np.array([1, 4])).all())
        self.assertTrue((w.exponentVector(3) == np.array([1, 1])).all())

    def test_order(self):
        words = sorted([self.word("ab"), self.word("b"), self.word("A"), self.word("a")])
        self.assertEqual([str(w) for w in words], ["A", "a", "b", "ab"])
        self.assertEqual(len({self.word("aB"), self.word("abBB")}), 1)

    def test_parseList(self):
        words = Word.parseList(["ab", "1", "aA", "b"], self.alphabet)
        self.assertEqual(words, [self.word("ab"), self.word("b")])
