from unittest import TestCase
from provar.classes.Config import Configuration
from provar.classes.Entry import Entry
from provar.lib.exceptions import ConfigurationError


class TestConfiguration(TestCase):
    def setUp(self):
        self.config = Configuration("tests/data/provar_defaults.xml")

    def test_file(self):
        self.assertTrue(isinstance(self.config.conf, Entry))
        self.assertTrue({"policy", "caps", "output"}.issubset(self.config.conf.__dir__()))
        self.assertEqual(self.config.conf.policy.base_primes, [2, 3, 5, 7])
        self.assertEqual(self.config.conf.policy.window, 3)
        self.assertEqual(self.config.conf.caps.fringe_vertices, 12)
        self.assertEqual(self.config.conf.caps.order, 24)
        self.assertEqual(self.config.conf.output.format, "json")
        self.assertEqual(self.config.policy().max_prime, 31)

    def test_defaults(self):
        config = Configuration(None)
        self.assertEqual(config.conf.policy.base_primes, [2, 3, 5, 7])
        self.assertEqual(config.conf.caps.fringe_members, 20000)
        self.assertEqual(config.conf.output.format, "json")

    def test_errors(self):
        with self.assertRaises(ConfigurationError):
            Configuration("tests/data/missing.xml")
        with self.assertRaises(ConfigurationError) as context:
            Configuration("tests/data/bad_defaults.xml")
        self.assertIn("Did you mean 'json'?", str(context.exception))


class TestEntry(TestCase):
    def test_check_int(self):
        entry = Entry(a="3", b="x", c=0)
        self.assertIsNone(entry.check_int("a", 1))
        self.assertEqual(entry.a, 3)
        self.assertIsNotNone(entry.check_int("b"))
        self.assertIsNotNone(entry.check_int("c", 1))
        self.assertIsNotNone(entry.check_int("d"))

    def test_check_int_list(self):
        entry = Entry(primes="2, 3,5", bad="2,x")
        self.assertIsNone(entry.check_int_list("primes"))
        self.assertEqual(entry.primes, [2, 3, 5])
        self.assertIsNotNone(entry.check_int_list("bad"))

    def test_check_selection(self):
        entry = Entry(format="text", other="txt")
        self.assertIsNone(entry.check_selection("format", ["json", "text"]))
        self.assertIn("Did you mean 'text'?", entry.check_selection("other", ["json", "text"]))
