from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.Word import Word
from provar.classes.oracle.FiniteGroup import FiniteGroup
from provar.classes.oracle.Hom import Hom


class TestHom(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")
        self.hom = Hom(FiniteGroup.cyclic(5), [1, 2])

    def test_evaluate(self):
        self.assertEqual(self.hom.evaluate(Word.parse("aab", self.alphabet)), 4)
        self.assertEqual(self.hom(Word.parse("A", self.alphabet)), 4)
        self.assertEqual(self.hom(Word.identity(self.alphabet)), 0)
        self.assertEqual(self.hom(Word.parse("abAB", self.alphabet)), 0)

    def test_imageOf(self):
        self.assertEqual(len(self.hom.imageOf(Word.parseList(["aa"], self.alphabet))), 5)
        self.assertEqual(self.hom.imageOf(Word.parseList(["aaaaa"], self.alphabet)), frozenset([0]))
        self.assertEqual(self.hom.imageOf([]), frozenset([0]))

    def test_toJson(self):
        self.assertEqual(str(self.hom), "Z5: x1 -> 1, x2 -> 2")
        self.assertEqual(self.hom.toJson(), {"group": "Z5", "order": 5, "images": ["1", "2"]})

    def test___str__(self):
        hom = Hom(FiniteGroup.cyclic(5), [1, 2], self.alphabet)
        self.assertEqual(str(hom), "Z5: a -> 1, b -> 2")
        self.assertEqual(hom.generator(1), "b")
        self.assertEqual(self.hom.generator(1), "x2")
