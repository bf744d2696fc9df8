from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple
import numpy as np
from .MagnusElement import MagnusElement
from .ModSubgroup import ModSubgroup
from ..Alphabet import Alphabet
from ..LabeledGraph import LabeledGraph
from ..Word import Word
from ...lib.exceptions import CertificateFailure
from ...lib.helpers import checkPrime
from ...lib.logger import logger


class MagnusQuotient:
    """
    The finite quotient F / [N, N]N^p of the free group F of rank n with N = [F, F]F^(p-1), realised inside the
    semidirect product of MagnusElement. The quotient is an extension of Q = (Z/(p-1)Z)^n by the elementary abelian
    group N / [N, N]N^p of rank r = 1 + (p-1)^n (n-1).
    """

    def __init__(self, p: int, n: int):
        """
        Initialize a new quotient

        Parameters
        ----------
        p : int
            The prime.
        n : int
            The rank of the free group.
        """
        self.p = checkPrime(p)
        self.n = n
        self.base_size = (p - 1) ** n
        self.layer_rank = 1 + self.base_size * (n - 1)
        self._validated = False

    def order(self) -> int:
        """
        The order (p-1)^n * p^r of the quotient.
        """
        return self.base_size * self.p ** self.layer_rank

    def image(self, word: Word) -> MagnusElement:
        return MagnusElement.fromWord(word, self.p, self.n)

    def generators(self) -> List[MagnusElement]:
        return [MagnusElement.generator(self.p, self.n, i) for i in range(self.n)]

    def enumerate(self, limit: Optional[int] = None) -> List[MagnusElement]:
        """
        Enumerate the elements of the quotient by a breadth first search from the identity.

        Parameters
        ----------
        limit : int
            Stop with an error if more elements are found.

        Returns
        -------
        elements : List[MagnusElement]
            The elements in order of discovery.
        """
        gens = self.generators()
        start = MagnusElement.identity(self.p, self.n)
        seen = {start.key()}
        elements = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = x * g
                if y.key() not in seen:
                    seen.add(y.key())
                    elements.append(y)
                    queue.append(y)
                    if limit is not None and len(elements) > limit:
                        raise ValueError("The quotient has more than %d elements." % limit)
        logger.debug("Enumerated %d elements of the quotient for p = %d." % (len(elements), self.p))
        return elements

    def layerDimension(self) -> int:
        """
        The dimension of the image of N, computed from the images of the Schreier basis of N. It equals the rank r of
        N / [N, N]N^p iff the embedding is faithful on this layer.
        """
        alphabet = Alphabet.default(self.n) if self.n <= 26 else Alphabet.fresh(self.n)
        basis = LabeledGraph.cayley(self.p - 1, alphabet).generators()
        vectors = [self.image(w).derivative.ravel() for w in basis]
        return ModSubgroup(np.array(vectors), self.p, self.n * self.base_size).dimension()

    def validate(self, samples: int = 6) -> bool:
        """
        Validate the quotient: the image of N must have dimension r, and commutators and p-th powers of the first
        Schreier basis elements of N must vanish. A violation raises a CertificateFailure.

        Parameters
        ----------
        samples : int
            The number of Schreier basis elements used for the kernel checks.

        Returns
        -------
        valid : bool
            True, if the checks passed.
        """
        if self._validated:
            return True
        dim = self.layerDimension()
        if dim != self.layer_rank:
            msg = "Image of N has dimension %d instead of %d for p = %d." % (dim, self.layer_rank, self.p)
            logger.error(msg, exit_=False)
            raise CertificateFailure(msg)
        alphabet = Alphabet.default(self.n) if self.n <= 26 else Alphabet.fresh(self.n)
        basis = LabeledGraph.cayley(self.p - 1, alphabet).generators()[:samples]
        kernel = [x.commutator(y) for x, y in combinations(basis, 2)] + [z.power(self.p) for z in basis]
        for w in kernel:
            if not self.image(w).isIdentity():
                msg = "Kernel element '" + str(w) + "' has a non-trivial image for p = %d." % self.p
                logger.error(msg, exit_=False)
                raise CertificateFailure(msg)
        self._validated = True
        return True

    def __schreier(self, gens: Iterable[Word]) -> Tuple[Dict[int, MagnusElement], ModSubgroup]:
        """
        Compute a transversal of the image of a subgroup over its projection to Q and the span of its Schreier
        vectors, which is the intersection of the image with the layer.
        """
        images = [self.image(w) for w in gens]
        identity = MagnusElement.identity(self.p, self.n)
        transversal = {0: identity}
        queue = deque([0])
        while queue:
            q = queue.popleft()
            for g in images:
                y = transversal[q] * g
                if y.tailIndex() not in transversal:
                    transversal[y.tailIndex()] = y
                    queue.append(y.tailIndex())
        vectors = []
        for q, t in transversal.items():
            for g in images:
                y = t * g
                s = y * transversal[y.tailIndex()].inverse()
                vectors.append(s.derivative.ravel())
        dim = self.n * self.base_size
        span = ModSubgroup(np.array(vectors, dtype=np.int64).reshape(len(vectors), dim), self.p, dim)
        return transversal, span

    def isFullImage(self, gens: Iterable[Word]) -> bool:
        """
        Decide whether a subgroup H maps onto the quotient, i.e. whether H[N, N]N^p = F.

        Parameters
        ----------
        gens : Iterable[Word]
            The generators of H.

        Returns
        -------
        full : bool
            True if the image is the whole quotient.
        """
        transversal, span = self.__schreier(gens)
        return len(transversal) == self.base_size and span.dimension() == self.layer_rank

    def closureContains(self, gens: Iterable[Word], word: Word) -> bool:
        """
        Decide the membership of a word in H[N, N]N^p, the closure of H in the variety of extensions of elementary
        abelian p-groups by abelian groups of exponent dividing p - 1.

        Parameters
        ----------
        gens : Iterable[Word]
            The generators of H.
        word : Word
            The word to check.

        Returns
        -------
        member : bool
            True if the image of the word lies in the image of H.
        """
        transversal, span = self.__schreier(gens)
        x = self.image(word)
        if x.tailIndex() not in transversal:
            return False
        return span.contains((x * transversal[x.tailIndex()].inverse()).derivative.ravel())
