from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.lib.exceptions import UnknownSymbol


class TestAlphabet(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")

    def test___init__(self):
        self.assertEqual(self.alphabet.size, 2)
        self.assertTrue(self.alphabet.textual)
        self.assertFalse(Alphabet(["x1", "x2"]).textual)
        with self.assertRaises(ValueError):
            Alphabet("")
        with self.assertRaises(ValueError):
            Alphabet("aa")

    def test_default(self):
        self.assertEqual(Alphabet.default(3), Alphabet("abc"))
        with self.assertRaises(ValueError):
            Alphabet.default(27)

    def test_fresh(self):
        self.assertEqual(Alphabet.fresh(3).symbols, ("x1", "x2", "x3"))
        self.assertEqual(Alphabet.fresh(0, "y").symbols, ("y1",))

    def test_index(self):
        self.assertEqual(self.alphabet.index("b"), 1)
        with self.assertRaises(UnknownSymbol):
            self.alphabet.index("c")

    def test_letter(self):
        self.assertEqual(self.alphabet.letter(1, -1), "B")
        self.assertEqual(Alphabet.fresh(2).letter(0, -1), "x1^-1")
