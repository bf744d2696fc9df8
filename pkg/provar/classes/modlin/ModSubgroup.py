from collections import deque
from typing import Iterable, Optional
import numpy as np
from ..Alphabet import Alphabet
from ..LabeledGraph import LabeledGraph
from ..Word import Word
from ...lib.exceptions import DimensionMismatch
from ...lib.helpers import howellForm


class ModSubgroup:
    """
    A subgroup of (Z/dZ)^n stored by the Howell form of its generators. The Howell form is unique, hence membership
    and equality are decided from it alone.
    """

    def __init__(self, rows: Optional[np.ndarray], d: int, n: int):
        """
        Initialize a new subgroup

        Parameters
        ----------
        rows : ndarray
            The generating vectors (one per row), may be None or empty for the zero subgroup.
        d : int
            The modulus (d >= 1).
        n : int
            The dimension.
        """
        if d < 1 or n < 0:
            raise ValueError("Invalid modulus %d or dimension %d." % (d, n))
        self.d = d
        self.n = n
        if rows is None or len(rows) == 0:
            rows = np.zeros((0, n), dtype=np.int64)
        rows = np.atleast_2d(np.asarray(rows, dtype=np.int64))
        if rows.shape[1] != n:
            raise DimensionMismatch("Expected vectors of dimension %d but got %d." % (n, rows.shape[1]))
        self.rows = howellForm(rows, d) if d > 1 else np.zeros((0, n), dtype=np.int64)
        self._pivots = [int(np.flatnonzero(row)[0]) for row in self.rows]

    @classmethod
    def abelianImage(cls, gens: Iterable[Word], d: int, n: Optional[int] = None) -> "ModSubgroup":
        """
        The image of a subgroup under the abelianisation modulo d.

        Parameters
        ----------
        gens : Iterable[Word]
            The generators of the subgroup.
        d : int
            The modulus.
        n : int
            The size of the alphabet, taken from the generators if omitted.

        Returns
        -------
        image : ModSubgroup
            The subgroup of (Z/dZ)^n spanned by the exponent vectors.
        """
        gens = list(gens)
        if n is None:
            if len(gens) == 0:
                raise ValueError("The dimension of an empty generating set must be given.")
            n = gens[0].alphabet.size
        for w in gens:
            if w.alphabet.size != n:
                raise DimensionMismatch("Word '" + str(w) + "' is not a word over %d symbols." % n)
        rows = np.array([w.exponentVector(d) for w in gens], dtype=np.int64).reshape(len(gens), n)
        return cls(rows, d, n)

    @classmethod
    def full(cls, d: int, n: int) -> "ModSubgroup":
        return cls(np.eye(n, dtype=np.int64), d, n)

    @classmethod
    def zero(cls, d: int, n: int) -> "ModSubgroup":
        return cls(None, d, n)

    def __eq__(self, other) -> bool:
        return isinstance(other, ModSubgroup) and self.d == other.d and self.n == other.n and \
            np.array_equal(self.rows, other.rows)

    def __hash__(self) -> int:
        return hash((self.d, self.n, self.rows.tobytes()))

    def __repr__(self) -> str:
        return "ModSubgroup(d=%d, rows=%s)" % (self.d, self.rows.tolist())

    def order(self) -> int:
        """
        The order of the subgroup: the product of d / pivot over the rows of the Howell form.
        """
        res = 1
        for row, c in zip(self.rows, self._pivots):
            res *= self.d // int(row[c])
        return res

    def dimension(self) -> int:
        """
        The number of rows of the Howell form, the dimension of the subgroup for a prime modulus.
        """
        return len(self.rows)

    def isFull(self) -> bool:
        return self.order() == self.d ** self.n

    def __check(self, vec) -> np.ndarray:
        vec = np.asarray(vec, dtype=np.int64).ravel()
        if vec.shape[0] != self.n:
            raise DimensionMismatch("Expected a vector of dimension %d but got %d." % (self.n, vec.shape[0]))
        return vec % self.d

    def reduce(self, vec) -> np.ndarray:
        """
        The canonical representative of the coset of a vector.

        Parameters
        ----------
        vec : array_like
            The vector to reduce.

        Returns
        -------
        rep : ndarray
            The reduced vector, equal for two vectors iff they lie in the same coset.
        """
        vec = self.__check(vec)
        for row, c in zip(self.rows, self._pivots):
            vec = (vec - (int(vec[c]) // int(row[c])) * row) % self.d
        return vec

    def contains(self, vec) -> bool:
        """
        Decide the membership of a vector.

        Parameters
        ----------
        vec : array_like
            The vector to check.

        Returns
        -------
        member : bool
            True if the vector is a member of the subgroup.
        """
        return not self.reduce(vec).any()

    def __contains__(self, vec) -> bool:
        return self.contains(vec)

    def cosetGraph(self, alphabet: Alphabet) -> LabeledGraph:
        """
        The Schreier graph of the cosets of the subgroup with respect to the standard generators. For the abelian
        image of a subgroup H this is the graph of H[F, F]F^d.

        Parameters
        ----------
        alphabet : Alphabet
            The alphabet of size n.

        Returns
        -------
        graph : LabeledGraph
            The complete graph of the cosets.
        """
        if alphabet.size != self.n:
            raise DimensionMismatch("Alphabet of size %d for a subgroup of dimension %d." % (alphabet.size, self.n))
        start = tuple(self.reduce(np.zeros(self.n, dtype=np.int64)))
        number = {start: 0}
        queue = deque([start])
        edges = []
        while queue:
            rep = queue.popleft()
            for i in range(self.n):
                vec = np.array(rep, dtype=np.int64)
                vec[i] += 1
                target = tuple(self.reduce(vec))
                if target not in number:
                    number[target] = len(number)
                    queue.append(target)
                edges.append((number[rep], i, number[target]))
        return LabeledGraph(alphabet, len(number), edges)
