from typing import Union
from .AVariety import AVariety
from .PrimePolicy import PrimePolicy
from .VarietySpec import VarietySpec
from ...classes import variety as variety
from ...lib.exceptions import ConfigurationError


class VarietyFactory:
    """
    A Factory creating objects of the type AVariety
    """

    def __init__(self, policy: PrimePolicy = None, max_vertices: int = 12, max_members: int = 20000,
                 cross_check: bool = False):
        """
        Instantiate a new factory object

        Parameters
        ----------
        policy : PrimePolicy
            The prime policy for the varieties Nil and Su.
        max_vertices : int
            The vertex cap for fringe enumerations.
        max_members : int
            The member cap for fringe enumerations.
        cross_check : bool
            Verify results by independent computations where available.
        """
        self._policy = PrimePolicy() if policy is None else policy
        self._caps = dict(max_vertices=max_vertices, max_members=max_members, cross_check=cross_check)

    def create(self, spec: Union[VarietySpec, str]) -> AVariety:
        """
        Create a new variety object

        Parameters
        ----------
        spec : Union[VarietySpec, str]
            The variety to create, either as description or in the syntax 'ab:d', 'gp:p', 'hp:p', 'nil' or 'su'.

        Returns
        -------
        obj : AVariety
            The created variety object
        """
        if isinstance(spec, str):
            spec = VarietySpec.parse(spec)
        if not hasattr(variety, spec.className):
            raise ConfigurationError("Unknown variety type: '" + spec.className + "'")
        class_ = getattr(variety, spec.className)
        if spec.param is None:
            return class_(policy=self._policy, **self._caps)
        return class_(spec.param, **self._caps)
