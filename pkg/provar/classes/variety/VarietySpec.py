import re
from typing import Optional
from ...lib.exceptions import ConfigurationError
from ...lib.helpers import checkPrime


class VarietySpec:
    """
    Description of one of the supported varieties of finite groups: abelian groups of exponent dividing d (ab:d),
    p-groups (gp:p), extensions of p-groups by abelian groups of exponent dividing p - 1 (hp:p), nilpotent groups (nil)
    and supersolvable groups (su).
    """
    KINDS = {"ab": "AbelianVariety", "gp": "PGroupVariety", "hp": "HpVariety", "nil": "NilpotentVariety",
             "su": "SupersolvableVariety"}

    def __init__(self, kind: str, param: Optional[int] = None):
        """
        Initialize a new variety description

        Parameters
        ----------
        kind : str
            The kind of the variety, one of 'ab', 'gp', 'hp', 'nil' and 'su'.
        param : int
            The exponent d for 'ab' or the prime p for 'gp' and 'hp'.
        """
        kind = kind.lower()
        if kind not in self.KINDS:
            raise ConfigurationError("Unknown variety '" + kind + "'. Valid varieties are " +
                                     ", ".join(self.KINDS) + ".")
        if kind in ("nil", "su"):
            if param is not None:
                raise ConfigurationError("Variety '" + kind + "' takes no parameter.")
        elif param is None:
            raise ConfigurationError("Variety '" + kind + "' needs a parameter.")
        elif kind == "ab":
            if param < 1:
                raise ConfigurationError("The exponent of an abelian variety must be positive.")
        else:
            param = checkPrime(param)
        self.kind = kind
        self.param = param

    @classmethod
    def parse(cls, text: str) -> "VarietySpec":
        """
        Parse a variety from the syntax 'ab:d', 'gp:p', 'hp:p', 'nil' or 'su'.

        Parameters
        ----------
        text : str
            The text to parse.

        Returns
        -------
        spec : VarietySpec
            The parsed variety.
        """
        match = re.fullmatch(r"\s*([A-Za-z]+)\s*(?::\s*(\d+))?\s*", text)
        if match is None:
            raise ConfigurationError("Malformed variety '" + text + "'.")
        return cls(match.group(1), None if match.group(2) is None else int(match.group(2)))

    @property
    def className(self) -> str:
        return self.KINDS[self.kind]

    def label(self) -> str:
        """
        The conventional name of the variety, e.g. 'Ab_4', 'G_3', 'H_5', 'Nil' or 'Su'.
        """
        if self.kind == "ab":
            return "Ab_%d" % self.param
        if self.kind == "gp":
            return "G_%d" % self.param
        if self.kind == "hp":
            return "H_%d" % self.param
        return self.kind.capitalize()

    def __str__(self) -> str:
        return self.kind if self.param is None else "%s:%d" % (self.kind, self.param)

    def __repr__(self) -> str:
        return "VarietySpec('" + str(self) + "')"

    def __eq__(self, other) -> bool:
        return isinstance(other, VarietySpec) and self.kind == other.kind and self.param == other.param

    def __hash__(self) -> int:
        return hash((self.kind, self.param))
