import string
from typing import Iterable, Sequence, Union
from ..lib.exceptions import UnknownSymbol


class Alphabet:
    """
    A finite ordered alphabet A, the basis of the free group F(A). The order of the symbols is fixed and is used for
    all canonical forms.
    """

    def __init__(self, symbols: Union[str, Sequence[str]] = "ab"):
        """
        Initialize a new alphabet

        Parameters
        ----------
        symbols : Union[str, Sequence[str]]
            The symbols of the alphabet. A string is split into single characters.
        """
        symbols = tuple(symbols)
        if len(symbols) < 1:
            raise ValueError("An alphabet needs at least one symbol.")
        if len(set(symbols)) != len(symbols):
            raise ValueError("Symbols of an alphabet must be distinct.")
        self.symbols = symbols
        self._index = {s: i for i, s in enumerate(symbols)}
        # text format: lowercase letter = generator, uppercase letter = inverse
        self.textual = all(len(s) == 1 and s in string.ascii_lowercase for s in symbols)

    @classmethod
    def default(cls, n: int) -> "Alphabet":
        """
        Create the alphabet of the first n lowercase letters.

        Parameters
        ----------
        n : int
            Size of the alphabet (1 <= n <= 26).

        Returns
        -------
        alphabet : Alphabet
            The created alphabet.
        """
        if not 1 <= n <= 26:
            raise ValueError("The text format supports alphabets of 1 to 26 letters.")
        return cls(string.ascii_lowercase[:n])

    @classmethod
    def fresh(cls, n: int, prefix: str = "x") -> "Alphabet":
        """
        Create an alphabet of the numbered symbols x1, ..., xn. Used for the bases of subgroups.

        Parameters
        ----------
        n : int
            Size of the alphabet.
        prefix : str
            The prefix of the symbols.

        Returns
        -------
        alphabet : Alphabet
            The created alphabet. For n = 0 a one-letter placeholder alphabet is returned since the trivial group has
            no basis.
        """
        return cls([prefix + str(i + 1) for i in range(max(n, 1))])

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterable[str]:
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __str__(self) -> str:
        return "".join(self.symbols) if self.textual else ",".join(self.symbols)

    def __repr__(self) -> str:
        return "Alphabet(" + repr(self.symbols) + ")"

    def index(self, symbol: str) -> int:
        """
        Get the index of a symbol

        Parameters
        ----------
        symbol : str
            The symbol to look up.

        Returns
        -------
        index : int
            The position of the symbol in the alphabet.
        """
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbol(symbol)

    def symbol(self, index: int) -> str:
        return self.symbols[index]

    def letter(self, index: int, sign: int) -> str:
        """
        Render a signed letter.

        Parameters
        ----------
        index : int
            The index of the symbol.
        sign : int
            +1 for the generator, -1 for its inverse.

        Returns
        -------
        letter : str
            The letter in text format.
        """
        if self.textual:
            return self.symbols[index] if sign > 0 else self.symbols[index].upper()
        return self.symbols[index] if sign > 0 else self.symbols[index] + "^-1"
