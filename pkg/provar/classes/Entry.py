from typing import Union, Tuple, Any, List
import difflib
import xml.etree.ElementTree as eT


class Entry(object):
    """
    A configuration entry, i.e. one XML tag of the defaults file. The attributes of the tag become attributes of the
    entry and are converted in place by the check-methods.
    """

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

    def parse(self, xml: eT.Element):
        """
        Copy the attributes of a XML element to the entry

        Parameters
        ----------
        xml : xml.etree.ElementTree.Element
            XML element to read the attributes from
        """
        for key, value in xml.attrib.items():
            setattr(self, key, value.strip())

    def __lookup(self, name: str) -> Tuple[Any, Union[None, str]]:
        if not hasattr(self, name):
            return None, "Attribute '" + name + "' is missing."
        return getattr(self, name), None

    def check_int(self, name: str, minimum: int = None) -> Union[None, str]:
        """
        Convert an attribute to an integer

        Parameters
        ----------
        name : str
            The name of the attribute.
        minimum : int
            The optional lower bound of the value.

        Returns
        -------
        mes : Union[None, str]
            The error message of the check or None if the attribute is a valid integer.
        """
        value, mes = self.__lookup(name)
        if mes is not None:
            return mes
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            return "Attribute '" + name + "' must be an integer, got '" + type(value).__name__ + "'."
        try:
            value = int(value)
        except ValueError:
            return "Attribute '" + name + "' must be an integer, got '" + value + "'."
        if minimum is not None and value < minimum:
            return "Attribute '" + name + "' must be at least %d, got %d." % (minimum, value)
        setattr(self, name, value)
        return None

    def check_int_list(self, name: str) -> Union[None, str]:
        """
        Convert an attribute to a list of integers. The XML value is a comma-separated list, empty items are skipped.

        Parameters
        ----------
        name : str
            The name of the attribute.

        Returns
        -------
        mes : Union[None, str]
            The error message of the check or None if the attribute is a valid list.
        """
        value, mes = self.__lookup(name)
        if mes is not None:
            return mes
        items: List[str] = value if isinstance(value, list) else str(value).split(",")
        try:
            setattr(self, name, [int(x) for x in items if len(str(x).strip()) > 0])
        except ValueError:
            return "Attribute '" + name + "' must be a comma-separated list of integers, got '" + str(value) + "'."
        return None

    def check_selection(self, name: str, choices: list) -> Union[None, str]:
        """
        Check an attribute against the allowed values and suggest the closest one on a mismatch

        Parameters
        ----------
        name : str
            The name of the attribute.
        choices : list
            The allowed values.

        Returns
        -------
        mes : Union[None, str]
            The error message of the check or None if the value is allowed.
        """
        value, mes = self.__lookup(name)
        if mes is not None or value in choices:
            return mes
        mes = "Value '" + str(value) + "' of attribute '" + name + "' is not one of " + ", ".join(choices) + "."
        match = difflib.get_close_matches(str(value), choices, 1)
        if len(match) > 0:
            mes += " Did you mean '" + match[0] + "'?"
        return mes
