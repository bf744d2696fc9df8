from itertools import product
from typing import Iterator, List, Optional
from .GroupCatalog import GroupCatalog
from .Hom import Hom
from ..Alphabet import Alphabet
from ..Word import Word
from ..variety.VarietySpec import VarietySpec

SEPARATED = "SEPARATED"
NOT_SEPARATED_UP_TO = "NOT_SEPARATED_UP_TO"


class Separation:
    """
    The outcome of a separation search. SEPARATED certifies that the word is not in the closure, the other verdict is
    inconclusive.
    """

    def __init__(self, status: str, max_order: int, witness: Optional[Hom] = None):
        self.status = status
        self.max_order = max_order
        self.witness = witness

    @property
    def separated(self) -> bool:
        return self.status == SEPARATED

    def __str__(self) -> str:
        if self.separated:
            return SEPARATED + " by " + str(self.witness)
        return NOT_SEPARATED_UP_TO + "(%d)" % self.max_order

    def toJson(self) -> dict:
        return {"status": self.status, "max_order": self.max_order,
                "witness": None if self.witness is None else self.witness.toJson()}


class SeparationOracle:
    """
    Search for homomorphisms into small groups of a variety which separate a word from a subgroup.
    """

    def __init__(self, max_order: int = 24, catalog: Optional[GroupCatalog] = None):
        """
        Initialize a new oracle

        Parameters
        ----------
        max_order : int
            The maximum order of the target groups (at most 64).
        catalog : GroupCatalog
            A prebuilt catalog with at least this maximum order.
        """
        self.max_order = max_order
        self.catalog = GroupCatalog(max_order) if catalog is None else catalog

    def homs(self, n: int, variety: Optional[VarietySpec] = None, alphabet: Optional[Alphabet] = None) -> \
            Iterator[Hom]:
        """
        Enumerate all homomorphisms from the free group of rank n into the catalog groups of a variety, by group order
        and then lexicographically by the images of the generators. The alphabet only names the generators.
        """
        for group in self.catalog.groups(variety):
            if group.order > self.max_order:
                continue
            for images in product(range(group.order), repeat=n):
                yield Hom(group, images, alphabet)

    def status(self, word: Word, gens: List[Word], variety: Optional[VarietySpec] = None) -> Separation:
        """
        Search a homomorphism phi with phi(word) outside the subgroup generated by phi(gens).

        Parameters
        ----------
        word : Word
            The word to separate.
        gens : List[Word]
            The generators of the subgroup.
        variety : VarietySpec
            The variety of the target groups, all catalog groups are used if omitted.

        Returns
        -------
        separation : Separation
            SEPARATED with the first witness in the order of homs, i.e. a homomorphism into the first separating
            group in catalog order, which is a group of minimal order. A word a outside <a^3> is separated by Z3,
            not by S3. Otherwise NOT_SEPARATED_UP_TO the maximum order.
        """
        for hom in self.homs(word.alphabet.size, variety, word.alphabet):
            if hom.evaluate(word) not in hom.imageOf(gens):
                return Separation(SEPARATED, self.max_order, hom)
        return Separation(NOT_SEPARATED_UP_TO, self.max_order)

    def checkClosure(self, gens: List[Word], closure_gens: List[Word], variety: Optional[VarietySpec] = None) -> \
            Optional[Hom]:
        """
        Check a necessary condition for a closure: every homomorphism into a group of the variety maps the closure
        into the image of the subgroup.

        Parameters
        ----------
        gens : List[Word]
            The generators of the subgroup.
        closure_gens : List[Word]
            The generators of the computed closure.
        variety : VarietySpec
            The variety of the target groups.

        Returns
        -------
        hom : Optional[Hom]
            The first violating homomorphism or None.
        """
        if len(closure_gens) == 0:
            return None
        n = closure_gens[0].alphabet.size
        for hom in self.homs(n, variety, closure_gens[0].alphabet):
            if hom.imageOf(closure_gens) != hom.imageOf(gens):
                return hom
        return None
