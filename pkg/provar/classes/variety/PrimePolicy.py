from typing import Iterable, List
from sympy import primerange
from ...lib.exceptions import ConfigurationError, NotPrime
from ...lib.helpers import checkPrime


class PrimePolicy:
    """
    The primes scanned when intersecting closures over all primes. The scan processes the primes in ascending order,
    covers all base primes and stops once the running result has been stable for a window of consecutive primes or
    the maximum prime has been reached.
    """

    def __init__(self, base_primes: Iterable[int] = (2, 3, 5, 7), window: int = 3, max_prime: int = 31):
        """
        Initialize a new prime policy

        Parameters
        ----------
        base_primes : Iterable[int]
            The primes which are always processed.
        window : int
            The number of consecutive primes without change after which the scan stops.
        max_prime : int
            The largest prime to process.
        """
        try:
            self.base_primes = sorted(set(checkPrime(p) for p in base_primes))
        except NotPrime as e:
            raise ConfigurationError("Base prime " + str(e.value) + " is not a prime.")
        if len(self.base_primes) == 0:
            raise ConfigurationError("At least one base prime is required.")
        if window < 1:
            raise ConfigurationError("The stability window must be positive.")
        if max_prime < self.base_primes[-1]:
            raise ConfigurationError("The maximum prime %d is smaller than the base prime %d." %
                                     (max_prime, self.base_primes[-1]))
        self.window = window
        self.max_prime = max_prime

    def primes(self) -> List[int]:
        """
        All primes up to the maximum prime in ascending order.
        """
        return [int(p) for p in primerange(2, self.max_prime + 1)]

    def toJson(self) -> dict:
        return {"base_primes": self.base_primes, "window": self.window, "max_prime": self.max_prime}
