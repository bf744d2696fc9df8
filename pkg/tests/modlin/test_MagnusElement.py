from unittest import TestCase
import random
from provar.classes.Alphabet import Alphabet
from provar.classes.Reproduction import randomWord
from provar.classes.Word import Word
from provar.classes.modlin.MagnusElement import MagnusElement, baseGroup
from provar.lib.exceptions import NotPrime


class TestMagnusElement(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")

    def image(self, text: str, p: int = 3) -> MagnusElement:
        return MagnusElement.fromWord(Word.parse(text, self.alphabet), p)

    def test_baseGroup(self):
        elements, shift = baseGroup(3, 2)
        self.assertEqual(elements.tolist(), [[0, 0], [1, 0], [0, 1], [1, 1]])
        self.assertEqual(shift.shape, (4, 4))
        for q in range(4):
            self.assertEqual(shift[q, q], 0)
            self.assertEqual(shift[0, q], q)

    def test_inverse(self):
        for text in ("a", "ab", "abAB", "bbaBA"):
            x = self.image(text)
            self.assertTrue((x * x.inverse()).isIdentity())
            self.assertTrue((~x * x).isIdentity())

    def test_fromWord(self):
        self.assertEqual(self.image("ab") * self.image("ba"), self.image("abba"))
        self.assertEqual(self.image("aa").tail.tolist(), [0, 0])
        self.assertFalse(self.image("aa").isIdentity())
        self.assertFalse(self.image("abAB").isIdentity())
        with self.assertRaises(NotPrime):
            MagnusElement.fromWord(Word.parse("a", self.alphabet), 4)

    def test_kernel(self):
        # p-th powers and commutators of elements of [F, F]F^(p-1) vanish
        self.assertTrue(self.image("aaaaaa").isIdentity())
        self.assertTrue(self.image("aabbAABB").isIdentity())
        self.assertTrue(self.image("abABabABabAB").isIdentity())
        self.assertTrue(self.image("aaaaaaaaaaaaaaaaaaaa", 5).isIdentity())
        self.assertFalse(self.image("aaaaaaaa", 5).isIdentity())

    def test_homomorphism(self):
        rng = random.Random(19)
        for p in (3, 5):
            for _ in range(30):
                u, v = randomWord(rng, self.alphabet), randomWord(rng, self.alphabet)
                x = MagnusElement.fromWord(u * v, p)
                self.assertEqual(x, MagnusElement.fromWord(u, p) * MagnusElement.fromWord(v, p))
                self.assertEqual(MagnusElement.fromWord(~u, p), ~MagnusElement.fromWord(u, p))

    def test___eq__(self):
        self.assertEqual(self.image("aA"), MagnusElement.identity(3, 2))
        self.assertEqual(hash(self.image("ab")), hash(self.image("ab")))
        self.assertNotEqual(self.image("ab"), self.image("ba"))
