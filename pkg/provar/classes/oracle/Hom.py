from typing import Iterable, Optional, Sequence
from ..Alphabet import Alphabet
from .FiniteGroup import FiniteGroup, Subgroup
from ..Word import Word


class Hom:
    """
    A homomorphism from the free group of rank n into a finite group, given by the images of the generators.
    """

    def __init__(self, target: FiniteGroup, images: Sequence[int], alphabet: Optional[Alphabet] = None):
        self.target = target
        self.alphabet = alphabet
        self.images = tuple(int(x) for x in images)
        self.n = len(self.images)

    def evaluate(self, word: Word) -> int:
        """
        Evaluate a word.

        Parameters
        ----------
        word : Word
            The word to evaluate.

        Returns
        -------
        element : int
            The image of the word in the target group.
        """
        res = self.target.identity
        for index, sign in word.letters:
            x = self.images[index]
            res = self.target.mul(res, x if sign > 0 else int(self.target.inv[x]))
        return res

    def __call__(self, word: Word) -> int:
        return self.evaluate(word)

    def imageOf(self, words: Iterable[Word]) -> Subgroup:
        """
        The subgroup generated by the images of some words.
        """
        return self.target.generate(self.evaluate(w) for w in words)

    def __str__(self) -> str:
        return self.target.name + ": " + ", ".join(
            "%s -> %s" % (self.generator(i), self.target.labels[x]) for i, x in enumerate(self.images))

    def generator(self, i: int) -> str:
        return "x%d" % (i + 1) if self.alphabet is None else self.alphabet.symbol(i)

    def toJson(self) -> dict:
        return {"group": self.target.name, "order": self.target.order,
                "images": [self.target.labels[x] for x in self.images]}
