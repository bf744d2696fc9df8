from unittest import TestCase
from provar.classes.Reproduction import Reproduction, randomGenerators, randomWord
from provar.classes.Alphabet import Alphabet
from provar.lib.exceptions import ConfigurationError
import random


class TestReproduction(TestCase):
    def setUp(self):
        self.suite = Reproduction(max_order=12, samples=20, dense_samples=5)

    def test_random(self):
        alphabet = Alphabet("ab")
        rng = random.Random(1)
        for _ in range(20):
            self.assertTrue(len(randomWord(rng, alphabet, 5)) <= 5)
            self.assertTrue(1 <= len(randomGenerators(rng, alphabet, 3)) <= 3)

    def test_run(self):
        for check in ("folding", "schreier_basis", "injective_morphism", "surjective_morphism", "membership"):
            rows = self.suite.run(check)
            self.assertEqual(len(rows), 1)
            self.assertTrue(rows[0]["passed"], rows[0]["actual"])
        with self.assertRaises(ConfigurationError):
            self.suite.run("unknown")

    def test_aliases(self):
        for alias, check in (("figure1", "folding"), ("section232", "schreier_basis"), ("figure3", "injective_morphism"),
                             ("figure4", "surjective_morphism")):
            rows = self.suite.run(alias)
            self.assertEqual([r["check"] for r in rows], [check])
            self.assertTrue(rows[0]["passed"], rows[0]["actual"])

    def test_fringe(self):
        expected, actual, passed = self.suite.fringe()
        self.assertTrue(passed, actual)

    def test_headline(self):
        expected, actual, passed = self.suite.headline()
        self.assertTrue(passed, actual)

    def test_oracle(self):
        expected, actual, passed = self.suite.oracle()
        self.assertTrue(passed, actual)
