from typing import Tuple
import numpy as np
from ..Word import Word
from ...lib.cache import cache
from ...lib.helpers import checkPrime


@cache
def baseGroup(p: int, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Tabulate the base group Q = (Z/(p-1)Z)^n. The elements are numbered in mixed radix, the first coordinate being the
    least significant digit.

    Parameters
    ----------
    p : int
        The prime.
    n : int
        The rank.

    Returns
    -------
    elements : ndarray
        The coordinate vectors of the elements, shape (|Q|, n).
    shift : ndarray
        shift[q, x] is the number of the element x - q, shape (|Q|, |Q|).
    """
    m = p - 1
    size = m ** n
    elements = np.array([[(k // m ** i) % m for i in range(n)] for k in range(size)], dtype=np.int64).reshape(size, n)
    weights = np.array([m ** i for i in range(n)], dtype=np.int64)
    diff = (elements[None, :, :] - elements[:, None, :]) % m
    shift = diff @ weights
    return elements, shift


class MagnusElement:
    """
    An element of the semidirect product (Z/pZ)[Q]^n x| Q with Q = (Z/(p-1)Z)^n. The product is
    (f, q)(g, r) = (f + q.g, q + r) with (q.g)(x) = g(x - q). Words map to this group by sending the i-th generator to
    (the i-th unit vector supported at 0, e_i); the kernel of this map is [N, N]N^p for N = [F, F]F^(p-1).
    """

    def __init__(self, p: int, n: int, derivative: np.ndarray, tail):
        """
        Initialize a new element

        Parameters
        ----------
        p : int
            The prime.
        n : int
            The rank of the free group.
        derivative : ndarray
            The derivative part, shape (n, |Q|), entries modulo p.
        tail : array_like
            The base group part, n entries modulo p - 1.
        """
        self.p = p
        self.n = n
        self.derivative = np.asarray(derivative, dtype=np.int64) % p
        self.tail = np.asarray(tail, dtype=np.int64) % (p - 1)

    @classmethod
    def identity(cls, p: int, n: int) -> "MagnusElement":
        return cls(p, n, np.zeros((n, (p - 1) ** n), dtype=np.int64), np.zeros(n, dtype=np.int64))

    @classmethod
    def generator(cls, p: int, n: int, i: int) -> "MagnusElement":
        derivative = np.zeros((n, (p - 1) ** n), dtype=np.int64)
        derivative[i, 0] = 1
        tail = np.zeros(n, dtype=np.int64)
        tail[i] = 1
        return cls(p, n, derivative, tail)

    @classmethod
    def fromWord(cls, word: Word, p: int, n: int = None) -> "MagnusElement":
        """
        Compute the image of a word.

        Parameters
        ----------
        word : Word
            The word to map.
        p : int
            The prime.
        n : int
            The rank of the free group, defaults to the alphabet size of the word.

        Returns
        -------
        image : MagnusElement
            The image of the word.
        """
        p = checkPrime(p)
        n = word.alphabet.size if n is None else n
        gens = [cls.generator(p, n, i) for i in range(n)]
        inverses = [g.inverse() for g in gens]
        res = cls.identity(p, n)
        for index, sign in word.letters:
            res = res * (gens[index] if sign > 0 else inverses[index])
        return res

    def tailIndex(self) -> int:
        m = self.p - 1
        return int(sum(int(x) * m ** i for i, x in enumerate(self.tail)))

    def __act(self, q: int, f: np.ndarray) -> np.ndarray:
        # (q.f)(x) = f(x - q)
        _, shift = baseGroup(self.p, self.n)
        return f[:, shift[q]]

    def __mul__(self, other: "MagnusElement") -> "MagnusElement":
        return MagnusElement(self.p, self.n, self.derivative + self.__act(self.tailIndex(), other.derivative),
                             self.tail + other.tail)

    def inverse(self) -> "MagnusElement":
        """
        The inverse (-((-q).f), -q).
        """
        neg = MagnusElement(self.p, self.n, self.derivative, -self.tail)
        return MagnusElement(self.p, self.n, -self.__act(neg.tailIndex(), self.derivative), -self.tail)

    def __invert__(self) -> "MagnusElement":
        return self.inverse()

    def isIdentity(self) -> bool:
        return not self.derivative.any() and not self.tail.any()

    def key(self) -> Tuple[bytes, bytes]:
        return self.derivative.tobytes(), self.tail.tobytes()

    def __eq__(self, other) -> bool:
        return isinstance(other, MagnusElement) and self.p == other.p and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.p, self.key()))

    def __repr__(self) -> str:
        return "MagnusElement(p=%d, derivative=%s, tail=%s)" % (self.p, self.derivative.tolist(), self.tail.tolist())
