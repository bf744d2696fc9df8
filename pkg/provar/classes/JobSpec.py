from typing import List, Optional
from .Alphabet import Alphabet
from .Config import Configuration
from .LabeledGraph import LabeledGraph
from .Word import Word
from .variety.PrimePolicy import PrimePolicy
from .variety.VarietySpec import VarietySpec
from ..lib.exceptions import ConfigurationError
from ..lib.helpers import splitWords

GRAPH_COMMANDS = ("fold", "intersect", "join", "closure", "export")
COMMANDS = ("fold", "member", "schreier", "intersect", "join", "fringe", "dense", "closure", "verify", "export",
            "reproduce")
# number of subgroups each command consumes
ARITY = {"fold": 1, "member": 1, "schreier": 1, "intersect": 2, "join": 2, "fringe": 1, "dense": 1, "closure": 1,
         "verify": 0, "export": 1, "reproduce": 0}


class JobSpec:
    """
    A validated description of one command. All inputs are parsed and all parameters are checked on construction, so
    that a JobSpec never fails for usage reasons once the computation has started.
    """

    def __init__(self, command: str, alphabet: Alphabet, subgroups: List[LabeledGraph], word: Optional[Word] = None,
                 variety: Optional[VarietySpec] = None, policy: Optional[PrimePolicy] = None,
                 max_vertices: int = 12, max_members: int = 20000, max_order: int = 24, cross_check: bool = False,
                 exit_status: bool = False, output_format: str = "json", strategy: str = "bfs",
                 only: Optional[str] = None):
        """
        Initialize a new job

        Parameters
        ----------
        command : str
            The command to run.
        alphabet : Alphabet
            The alphabet of the free group.
        subgroups : List[LabeledGraph]
            The input subgroups.
        word : Word
            The word queried by 'member', 'closure' and 'verify'.
        variety : VarietySpec
            The variety for 'dense', 'closure' and 'verify'.
        policy : PrimePolicy
            The prime policy for the varieties Nil and Su.
        max_vertices : int
            The vertex cap of fringe enumerations.
        max_members : int
            The member cap of fringe enumerations.
        max_order : int
            The maximum order of the groups used by the oracle.
        cross_check : bool
            Verify results by independent computations.
        exit_status : bool
            Exit with status 1 on a negative answer.
        output_format : str
            One of 'json', 'text' and 'dot'.
        strategy : str
            The spanning tree strategy for 'schreier', 'bfs' or 'dfs'.
        only : str
            Run a single check of the acceptance suite.
        """
        if command not in COMMANDS:
            raise ConfigurationError("Unknown command '" + command + "'.")
        if len(subgroups) < ARITY[command]:
            raise ConfigurationError("Command '" + command + "' needs %d subgroup(s) but got %d." %
                                     (ARITY[command], len(subgroups)))
        for g in subgroups:
            g.checkAlphabet(alphabet)
        if command == "member" and word is None:
            raise ConfigurationError("Command 'member' needs a word.")
        if command in ("dense", "closure") and variety is None:
            raise ConfigurationError("Command '" + command + "' needs a variety.")
        if command == "verify" and len(subgroups) > 0 and (word is None or variety is None):
            raise ConfigurationError("A separation query needs a subgroup, a word and a variety.")
        if output_format not in ("json", "text", "dot"):
            raise ConfigurationError("Unknown output format '" + output_format + "'.")
        if output_format == "dot" and command not in GRAPH_COMMANDS:
            raise ConfigurationError("The output format 'dot' is only available for the commands " +
                                     ", ".join(GRAPH_COMMANDS) + ".")
        if strategy not in ("bfs", "dfs"):
            raise ConfigurationError("Unknown spanning tree strategy '" + strategy + "'.")
        for name, value in (("fringe vertex cap", max_vertices), ("fringe member cap", max_members),
                            ("maximum order", max_order)):
            if value < 1:
                raise ConfigurationError("The " + name + " must be positive.")
        if max_order > 64:
            raise ConfigurationError("The maximum group order is 64 but got %d." % max_order)
        self.command = command
        self.alphabet = alphabet
        self.subgroups = subgroups[:ARITY[command]] if ARITY[command] > 0 else subgroups[:1]
        self.word = word
        self.variety = variety
        self.policy = PrimePolicy() if policy is None else policy
        self.max_vertices = max_vertices
        self.max_members = max_members
        self.max_order = max_order
        self.cross_check = cross_check
        self.exit_status = exit_status
        self.output_format = output_format
        self.strategy = strategy
        self.only = only

    @staticmethod
    def parseAlphabet(text: str) -> Alphabet:
        """
        Parse an alphabet given either as its symbols ('ab') or as its size ('3').
        """
        try:
            return Alphabet.default(int(text)) if text.isdigit() else Alphabet(text)
        except ValueError as e:
            raise ConfigurationError("Invalid alphabet '" + text + "': " + str(e))

    @classmethod
    def fromArgs(cls, args, config: Configuration) -> "JobSpec":
        """
        Create a job from parsed command line arguments. Flags override the values of the configuration.

        Parameters
        ----------
        args : Namespace
            The parsed command line arguments.
        config : Configuration
            The configuration holding the defaults.

        Returns
        -------
        job : JobSpec
            The validated job.
        """
        alphabet = cls.parseAlphabet(getattr(args, "alphabet", "ab"))
        subgroups = []
        if getattr(args, "input", None) is not None:
            subgroups += LabeledGraph.fromFile(args.input, alphabet, allow_exponents=True)
        for text in getattr(args, "subgroups", None) or []:
            subgroups.append(LabeledGraph.fromStrings(splitWords(text), alphabet, allow_exponents=True))
        word = None
        if getattr(args, "word", None) is not None:
            word = Word.parse(args.word, alphabet, allow_exponents=True)
        variety = None
        if getattr(args, "variety", None) is not None:
            variety = VarietySpec.parse(args.variety)

        policy = config.conf.policy
        primes = getattr(args, "primes", None)
        window = getattr(args, "window", None)
        max_prime = getattr(args, "max_prime", None)
        try:
            base_primes = [int(p) for p in splitWords(primes)] if primes is not None else policy.base_primes
        except ValueError:
            raise ConfigurationError("Cannot convert the primes '" + primes + "' to a list of integers.")
        policy = PrimePolicy(base_primes, window if window is not None else policy.window,
                             max_prime if max_prime is not None else policy.max_prime)

        caps = config.conf.caps

        def flag(name: str, default):
            value = getattr(args, name, None)
            return default if value is None else value

        return cls(args.command, alphabet, subgroups, word, variety, policy,
                   max_vertices=flag("fringe_cap", caps.fringe_vertices),
                   max_members=flag("fringe_members", caps.fringe_members),
                   max_order=flag("max_order", caps.order),
                   cross_check=flag("cross_check", False), exit_status=flag("exit_status", False),
                   output_format=flag("format", config.conf.output.format), strategy=flag("strategy", "bfs"),
                   only=flag("only", None))
