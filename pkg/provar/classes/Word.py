import re
from typing import Iterable, List, Sequence, Tuple
import numpy as np
from .Alphabet import Alphabet
from ..lib.exceptions import AlphabetMismatch, UnknownSymbol

Letter = Tuple[int, int]


class Word:
    """
    A freely reduced word over a signed alphabet, i.e. an element of the free group F(A). Words are immutable.
    """

    def __init__(self, alphabet: Alphabet, letters: Iterable[Letter] = ()):
        """
        Initialize a new word. The given letters are freely reduced.

        Parameters
        ----------
        alphabet : Alphabet
            The alphabet the word is written in.
        letters : Iterable[Tuple[int, int]]
            The letters as pairs (symbol index, sign) with sign +1 or -1.
        """
        self.alphabet = alphabet
        reduced = []
        for index, sign in letters:
            if not 0 <= index < alphabet.size or sign not in (1, -1):
                raise ValueError("Invalid letter (%d, %d)." % (index, sign))
            if reduced and reduced[-1][0] == index and reduced[-1][1] == -sign:
                reduced.pop()
            else:
                reduced.append((index, sign))
        self.letters = tuple(reduced)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet)

    @classmethod
    def generator(cls, alphabet: Alphabet, index: int) -> "Word":
        return cls(alphabet, [(index, 1)])

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet, allow_exponents: bool = False) -> "Word":
        """
        Parse a word from its text representation. In a textual alphabet a lowercase letter denotes a generator and
        the corresponding uppercase letter its inverse. Words over alphabets with longer symbols are written as
        '*'-separated tokens like 'x1*x2^-1'.

        Parameters
        ----------
        text : str
            The text to parse. The empty string and '1' denote the identity.
        alphabet : Alphabet
            The alphabet of the word.
        allow_exponents : bool
            Expand the sugar 'a^3' or 'A^2' (textual alphabets only) before parsing.

        Returns
        -------
        word : Word
            The freely reduced word.
        """
        text = text.strip()
        if text in ("", "1"):
            return cls(alphabet)
        if not alphabet.textual:
            return cls.__parseTokens(text, alphabet)
        if allow_exponents:
            text = re.sub(r"([A-Za-z])\^(-?\d+)", lambda m: cls.__expand(m.group(1), int(m.group(2))), text)
        letters = []
        for ch in text:
            if ch.islower():
                letters.append((alphabet.index(ch), 1))
            elif ch.isupper() and ch.lower() in alphabet.symbols:
                letters.append((alphabet.index(ch.lower()), -1))
            else:
                raise UnknownSymbol(ch)
        return cls(alphabet, letters)

    @staticmethod
    def __expand(letter: str, exponent: int) -> str:
        if exponent < 0:
            letter = letter.swapcase()
        return letter * abs(exponent)

    @classmethod
    def __parseTokens(cls, text: str, alphabet: Alphabet) -> "Word":
        letters = []
        for token in text.split("*"):
            match = re.fullmatch(r"\s*([^\s^]+)\s*(?:\^\s*(-?\d+))?\s*", token)
            if match is None:
                raise UnknownSymbol(token)
            index = alphabet.index(match.group(1))
            exponent = int(match.group(2)) if match.group(2) is not None else 1
            letters.extend([(index, 1 if exponent > 0 else -1)] * abs(exponent))
        return cls(alphabet, letters)

    def format(self, exponents: bool = False) -> str:
        """
        Render the word in text format.

        Parameters
        ----------
        exponents : bool
            Collapse runs of a letter to the sugar 'a^k'.

        Returns
        -------
        text : str
            The rendered word; the identity is rendered as '1'.
        """
        if len(self.letters) == 0:
            return "1"
        if not exponents:
            sep = "" if self.alphabet.textual else "*"
            return sep.join(self.alphabet.letter(i, s) for i, s in self.letters)
        runs = []
        for index, sign in self.letters:
            if runs and runs[-1][0] == (index, sign):
                runs[-1][1] += 1
            else:
                runs.append([(index, sign), 1])
        parts = []
        for (index, sign), count in runs:
            if self.alphabet.textual:
                letter = self.alphabet.letter(index, sign)
                parts.append(letter if count == 1 else letter + "^" + str(count))
            else:
                symbol = self.alphabet.symbol(index)
                exp = sign * count
                parts.append(symbol if exp == 1 else symbol + "^" + str(exp))
        return ("" if self.alphabet.textual else "*").join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return "Word('" + self.format() + "')"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.alphabet == other.alphabet and self.letters == other.letters

    def __lt__(self, other: "Word") -> bool:
        # shortlex order
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.letters))

    def isIdentity(self) -> bool:
        return len(self.letters) == 0

    def __checkAlphabet(self, other: "Word"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("Words over different alphabets: '" + str(self.alphabet) + "' and '" +
                                   str(other.alphabet) + "'.")

    def __mul__(self, other: "Word") -> "Word":
        """
        Multiply with another word

        Parameters
        ----------
        other : Word
            The right factor.

        Returns
        -------
        prod : Word
            The reduced concatenation.
        """
        self.__checkAlphabet(other)
        return Word(self.alphabet, self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word(self.alphabet, [(i, -s) for i, s in reversed(self.letters)])

    def __pow__(self, k: int) -> "Word":
        return self.power(k)

    def multiply(self, other: "Word") -> "Word":
        return self * other

    def invert(self) -> "Word":
        return ~self

    def power(self, k: int) -> "Word":
        base = self if k >= 0 else ~self
        return Word(self.alphabet, base.letters * abs(k))

    def conjugate(self, u: "Word") -> "Word":
        """
        Conjugate by another word

        Parameters
        ----------
        u : Word
            The conjugating word.

        Returns
        -------
        conj : Word
            The word u * self * u^-1.
        """
        return u * self * ~u

    def commutator(self, other: "Word") -> "Word":
        """
        The commutator [self, other] = self * other * self^-1 * other^-1.
        """
        return self * other * ~self * ~other

    def exponentVector(self, d: int = 0) -> np.ndarray:
        """
        The image of the word under abelianisation.

        Parameters
        ----------
        d : int
            The modulus. For d = 0 the integer exponent sums are returned.

        Returns
        -------
        vec : ndarray
            The exponent sum of each symbol (modulo d for d > 0).
        """
        vec = np.zeros(self.alphabet.size, dtype=np.int64)
        for index, sign in self.letters:
            vec[index] += sign
        return vec % d if d > 0 else vec

    @staticmethod
    def parseList(texts: Sequence[str], alphabet: Alphabet, allow_exponents: bool = False) -> List["Word"]:
        """
        Parse a list of words, dropping the identity.

        Parameters
        ----------
        texts : Sequence[str]
            The words in text format.
        alphabet : Alphabet
            The alphabet of the words.
        allow_exponents : bool
            Accept the exponent sugar 'a^k'.

        Returns
        -------
        words : List[Word]
            The parsed non-trivial words.
        """
        words = [Word.parse(t, alphabet, allow_exponents) for t in texts]
        return [w for w in words if not w.isIdentity()]
