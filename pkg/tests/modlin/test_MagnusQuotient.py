from unittest import TestCase
from provar.classes.Alphabet import Alphabet
from provar.classes.Word import Word
from provar.classes.modlin.MagnusQuotient import MagnusQuotient


class TestMagnusQuotient(TestCase):
    def setUp(self):
        self.alphabet = Alphabet("ab")
        self.quotient = MagnusQuotient(3, 2)

    def words(self, *texts: str):
        return Word.parseList(texts, self.alphabet)

    def test_order(self):
        self.assertEqual(self.quotient.layer_rank, 5)
        self.assertEqual(self.quotient.order(), 972)
        self.assertEqual(MagnusQuotient(5, 2).order(), 16 * 5 ** 17)

    def test_enumerate(self):
        self.assertEqual(len(self.quotient.enumerate()), 972)
        with self.assertRaises(ValueError):
            self.quotient.enumerate(limit=100)

    def test_layerDimension(self):
        self.assertEqual(self.quotient.layerDimension(), 5)
        self.assertEqual(MagnusQuotient(5, 2).layerDimension(), 17)

    def test_validate(self):
        self.assertTrue(self.quotient.validate())
        self.assertTrue(self.quotient.validate())

    def test_isFullImage(self):
        self.assertTrue(self.quotient.isFullImage(self.words("a", "b")))
        self.assertTrue(self.quotient.isFullImage(self.words("ab", "b")))
        self.assertFalse(self.quotient.isFullImage(self.words("aa", "b")))
        self.assertFalse(self.quotient.isFullImage(self.words("aaa", "b")))

    def test_closureContains(self):
        a = self.words("a")[0]
        self.assertFalse(self.quotient.closureContains(self.words("aaa"), a))
        self.assertFalse(self.quotient.closureContains(self.words("aa"), a))
        self.assertTrue(self.quotient.closureContains(self.words("aaa"), self.words("aaaaaaaaa")[0]))
        self.assertTrue(self.quotient.closureContains(self.words("a", "b"), self.words("abAB")[0]))
        self.assertTrue(self.quotient.closureContains(self.words("aaa"), Word.identity(self.alphabet)))
