from unittest import TestCase
from provar.classes.variety.PrimePolicy import PrimePolicy
from provar.lib.exceptions import ConfigurationError


class TestPrimePolicy(TestCase):
    def test___init__(self):
        policy = PrimePolicy([5, 2, 2], 2, 13)
        self.assertEqual(policy.base_primes, [2, 5])
        self.assertEqual(policy.toJson(), {"base_primes": [2, 5], "window": 2, "max_prime": 13})
        with self.assertRaises(ConfigurationError):
            PrimePolicy([4])
        with self.assertRaises(ConfigurationError):
            PrimePolicy([])
        with self.assertRaises(ConfigurationError):
            PrimePolicy(window=0)
        with self.assertRaises(ConfigurationError):
            PrimePolicy([2, 7], max_prime=5)

    def test_primes(self):
        self.assertEqual(PrimePolicy().primes(), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
        self.assertEqual(PrimePolicy([2], max_prime=10).primes(), [2, 3, 5, 7])
