import os.path
import xml.etree.ElementTree as eT
from typing import Optional
from .Entry import Entry
from .variety.PrimePolicy import PrimePolicy
from ..lib.exceptions import ConfigurationError
from ..lib.logger import logger


class Configuration(object):
    """
    A Class to parse the XML configuration file holding the default caps, the prime policy and the output format.

    Attributes
    ----------
    conf : Entry
        Parsed configuration file as Entry-tree
    """
    conf = None

    def __init__(self, file: Optional[str] = "provar_defaults.xml"):
        """
        Parse a XML configuration file.

        Parameters
        ----------
        file : str
            configuration file to parse. The built-in defaults are used if None.
        """
        if file is None:
            self.conf = Entry()
        else:
            # Check if configuration file exists
            if not os.path.exists(file):
                raise ConfigurationError("Configuration file '" + file + "' doesn't exist.")
            logger.info("Reading configuration from file '" + file + "'.")
            try:
                self.conf = self.__parser(eT.parse(file).getroot())
            except eT.ParseError as e:
                raise ConfigurationError("Configuration file '" + file + "' is malformed: " + str(e))
        self.__check_config()

    def __parser(self, parent: eT.Element):
        """
        Parse a XML element tree to an Entry-tree

        Parameters
        ----------
        parent : xml.etree.ElementTree.Element
            The parent XML tree to be parsed

        Returns
        -------
        obj : Entry
            The parsed XML tree
        """
        # Initialize empty Entry object
        obj = Entry()

        for child in parent:
            # recursively parse children of child element
            parsed_child = self.__parser(child)
            # parse attributes of child element
            parsed_child.parse(child)

            # Add or append the parsed child to the prepared Entry object
            if hasattr(obj, child.tag):
                if isinstance(getattr(obj, child.tag), list):
                    getattr(obj, child.tag).append(parsed_child)
                else:
                    setattr(obj, child.tag, [getattr(obj, child.tag), parsed_child])
            else:
                setattr(obj, child.tag, parsed_child)
        return obj

    @staticmethod
    def __check(entry: Entry, path: str, mes: Optional[str]):
        if mes is not None:
            logger.error("Configuration check: " + path + ": " + mes, exit_=False)
            raise ConfigurationError("Configuration check: " + path + ": " + mes)

    def __check_config(self):
        """
        Check the parsed configuration file and fill in the defaults of missing containers and parameters.
        """
        # Check policy
        if not hasattr(self.conf, "policy"):
            setattr(self.conf, "policy", Entry())
        policy = self.conf.policy
        for name, default in (("base_primes", [2, 3, 5, 7]), ("window", 3), ("max_prime", 31)):
            if not hasattr(policy, name):
                setattr(policy, name, default)
        self.__check(policy, "policy", policy.check_int_list("base_primes"))
        self.__check(policy, "policy", policy.check_int("window", 1))
        self.__check(policy, "policy", policy.check_int("max_prime", 2))

        # Check caps
        if not hasattr(self.conf, "caps"):
            setattr(self.conf, "caps", Entry())
        caps = self.conf.caps
        for name, default in (("fringe_vertices", 12), ("fringe_members", 20000), ("order", 24)):
            if not hasattr(caps, name):
                setattr(caps, name, default)
            self.__check(caps, "caps", caps.check_int(name, 1))
        if caps.order > 64:
            self.__check(caps, "caps", "The maximum group order is 64 but got %d." % caps.order)

        # Check output
        if not hasattr(self.conf, "output"):
            setattr(self.conf, "output", Entry())
        if not hasattr(self.conf.output, "format"):
            setattr(self.conf.output, "format", "json")
        self.__check(self.conf.output, "output", self.conf.output.check_selection("format", ["json", "text", "dot"]))

    def policy(self) -> PrimePolicy:
        """
        The prime policy of the configuration.
        """
        return PrimePolicy(self.conf.policy.base_primes, self.conf.policy.window, self.conf.policy.max_prime)
