import random
from typing import Callable, Dict, List, Optional, Tuple
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup
from .Alphabet import Alphabet
from .GraphMorphism import GraphMorphism
from .LabeledGraph import LabeledGraph
from .SchreierData import SchreierData
from .Word import Word
from .lattice.Fringe import Fringe
from .modlin.MagnusQuotient import MagnusQuotient
from .oracle.FiniteGroup import FiniteGroup
from .oracle.GroupCatalog import GroupCatalog
from .oracle.LemmaVerifier import LemmaVerifier
from .oracle.SeparationOracle import SeparationOracle
from .variety.HpVariety import HpVariety
from .variety.PrimePolicy import PrimePolicy
from .variety.VarietyFactory import VarietyFactory
from .variety.VarietySpec import VarietySpec
from ..lib.exceptions import ConfigurationError, ProvarError
from ..lib.logger import logger

Outcome = Tuple[str, str, bool]


def randomWord(rng: random.Random, alphabet: Alphabet, max_length: int = 8) -> Word:
    """
    A random reduced word of length at most max_length.
    """
    letters = [(rng.randrange(alphabet.size), rng.choice((1, -1))) for _ in range(rng.randint(1, max_length))]
    return Word(alphabet, letters)


def randomGenerators(rng: random.Random, alphabet: Alphabet, max_gens: int = 4, max_length: int = 8) -> List[Word]:
    return [randomWord(rng, alphabet, max_length) for _ in range(rng.randint(1, max_gens))]


class Reproduction:
    """
    The acceptance suite: the worked examples of folding, Schreier bases and morphisms, randomized membership and
    intersection properties, closure values cross-checked against small groups, the denseness criterion against the
    Magnus quotient and the finite group lemmas on the group catalog.
    """

    def __init__(self, policy: Optional[PrimePolicy] = None, max_order: int = 24, samples: int = 500,
                 dense_samples: int = 100, seed: int = 2024):
        """
        Initialize the suite

        Parameters
        ----------
        policy : PrimePolicy
            The prime policy for the supersolvable closures.
        max_order : int
            The maximum order of the groups used by the oracle.
        samples : int
            The number of random subgroups of the membership check.
        dense_samples : int
            The number of random subgroups per prime of the denseness check.
        seed : int
            The seed of the random subgroups.
        """
        self.alphabet = Alphabet("ab")
        self.factory = VarietyFactory(policy)
        self.max_order = max_order
        self.samples = samples
        self.dense_samples = dense_samples
        self.seed = seed
        self.checks: Dict[str, Callable[[], Outcome]] = {
            "folding": self.folding, "schreier_basis": self.schreier_basis,
            "injective_morphism": self.injective_morphism, "surjective_morphism": self.surjective_morphism,
            "membership": self.membership, "closures": self.closures,
            "hpdense": self.hpdense, "fringe": self.fringe, "oracle": self.oracle, "headline": self.headline}
        self.aliases = {"figure1": "folding", "section232": "schreier_basis", "figure3": "injective_morphism",
                        "figure4": "surjective_morphism"}

    def graph(self, texts: str) -> LabeledGraph:
        return LabeledGraph.fromStrings(texts, self.alphabet)

    def run(self, only: Optional[str] = None) -> List[dict]:
        """
        Run the checks of the suite.

        Parameters
        ----------
        only : str
            The name or alias of a single check to run. All checks are run if omitted.

        Returns
        -------
        rows : List[dict]
            One row per check with the keys 'check', 'expected', 'actual' and 'passed'.
        """
        only = self.aliases.get(only, only)
        if only is not None and only not in self.checks:
            raise ConfigurationError("Unknown check '" + only + "'. Valid checks are " +
                                     ", ".join(list(self.checks) + list(self.aliases)) + ".")
        rows = []
        for name, check in self.checks.items():
            if only is not None and name != only:
                continue
            logger.info("Running check '" + name + "'...", extra={"spinning": True})
            try:
                expected, actual, passed = check()
            except ProvarError as e:
                expected, actual, passed = "no error", type(e).__name__ + ": " + str(e), False
            if not passed:
                logger.warning("Check '" + name + "' failed: expected " + expected + ", got " + actual + ".")
            rows.append({"check": name, "expected": expected, "actual": actual, "passed": passed})
        logger.info("%d of %d checks passed." % (sum(r["passed"] for r in rows), len(rows)),
                    extra={"spinning": False})
        return rows

    def folding(self) -> Outcome:
        """
        Folding <baB, bbA> gives the 3-vertex graph independent of the order of the identifications.
        """
        expected = LabeledGraph(self.alphabet, 3, [(0, 1, 1), (1, 0, 1), (1, 1, 2), (0, 0, 2)])
        gens = Word.parseList(["baB", "bbA"], self.alphabet)
        graphs = {LabeledGraph.fromGenerators(gens, self.alphabet)}
        for i in range(50):
            graphs.add(LabeledGraph.fromGenerators(gens, self.alphabet, random.Random(self.seed + i)))
        return "1 canonical form equal to the 3-vertex graph", "%d canonical form(s)" % len(graphs), \
               graphs == {expected}

    def schreier_basis(self) -> Outcome:
        """
        The graph of <abAb, BAbAb, AB, BabbbAb> has 6 vertices, 9 edges, rank 4 and infinite index, and some spanning
        tree gives the basis {abAb, BaBab, BabbbAb, ba}.
        """
        graph = self.graph("abAb,BAbAb,AB,BabbbAb")
        basis = Word.parseList(["abAb", "BaBab", "BabbbAb", "ba"], self.alphabet)
        wanted = {min(w, ~w) for w in basis}
        found = any({min(w, ~w) for w in SchreierData(graph, tree).basisWords()} == wanted
                    for tree in SchreierData.spanningTrees(graph))
        members = all(graph.contains(w) for w in basis)
        actual = "V=%d E=%d rank=%d index=%s basis %s, members %s" % (
            graph.vertex_count, len(graph.edges), graph.rank(), graph.index(), "found" if found else "missing",
            members)
        return "V=6 E=9 rank=4 index=None basis found, members True", actual, \
               (graph.vertex_count, len(graph.edges), graph.rank(), graph.index(), found, members) == \
               (6, 9, 4, None, True, True)

    def injective_morphism(self) -> Outcome:
        morphism = GraphMorphism.find(self.graph("abbAb,abba"), self.graph("bAbbbb,abbbb,Abb,BBAb"))
        actual = "no morphism" if morphism is None else "injective %s" % morphism.injective
        return "injective True", actual, morphism is not None and morphism.injective

    def surjective_morphism(self) -> Outcome:
        source, target = self.graph("abbA,abaaBA,ababa"), self.graph("aa,abba,ababa")
        morphism = GraphMorphism.find(source, target)
        if morphism is None:
            return "surjective True, in fringe True", "no morphism", False
        member = Fringe.isMember(source, target)
        return "surjective True, in fringe True", "surjective %s, in fringe %s" % (morphism.surjective, member), \
               morphism.surjective and member

    def membership(self) -> Outcome:
        """
        Membership agrees with refolding and membership in an intersection is membership in both subgroups.
        """
        rng = random.Random(self.seed)
        mismatches = 0
        for _ in range(self.samples):
            gens = randomGenerators(rng, self.alphabet)
            h = LabeledGraph.fromGenerators(gens, self.alphabet)
            k = LabeledGraph.fromGenerators(randomGenerators(rng, self.alphabet), self.alphabet)
            meet = h & k
            for _ in range(20):
                w = randomWord(rng, self.alphabet)
                refold = LabeledGraph.fromGenerators(gens + [w], self.alphabet) == h
                if h.contains(w) != refold or meet.contains(w) != (h.contains(w) and k.contains(w)):
                    mismatches += 1
        return "0 mismatches", "%d mismatches" % mismatches, mismatches == 0

    def closures(self) -> Outcome:
        """
        Closure values, each cross-checked against the groups of the variety up to the maximum order, and their
        idempotence.
        """
        oracle = SeparationOracle(self.max_order)
        cases = [("gp:2", "aa", "aa"), ("gp:3", "aa", "a"), ("hp:3", "aaa", "aaa"), ("hp:5", "aaa", "a"),
                 ("su", "aaa", "aaa"), ("su", "aa", "aa")]
        cases += [(v, "a,b", "a,b") for v in ("ab:6", "gp:2", "hp:3", "nil", "su")]
        failed = []
        for variety, gens, expected in cases:
            graph = self.graph(gens)
            closure = self.factory.create(variety).calcClosure(graph).graph
            spec = VarietySpec.parse(variety)
            ok = closure == self.graph(expected)
            ok = ok and oracle.checkClosure(graph.generators(), closure.generators(), spec) is None
            ok = ok and self.factory.create(variety).calcClosure(closure).graph == closure
            if not ok:
                failed.append("cl_%s(<%s>)" % (variety, gens))
        # a is not in the supersolvable closure of <a^3>
        separation = oracle.status(Word.parse("a", self.alphabet), [Word.parse("aaa", self.alphabet)],
                                   VarietySpec("su"))
        if not separation.separated:
            failed.append("separation of a from <aaa>")
        return "all %d closures as expected, a separated" % len(cases), \
               "failed: " + ", ".join(failed) if failed else "all %d closures as expected, a separated" % len(cases), \
               len(failed) == 0

    def hpdense(self) -> Outcome:
        """
        The rank criterion for H_p-denseness agrees with the surjectivity onto the Magnus quotient, and the quotient
        for p = 3 on two generators has 972 elements.
        """
        rng = random.Random(self.seed)
        disagreements = 0
        for p in (3, 5):
            quotient = MagnusQuotient(p, self.alphabet.size)
            quotient.validate()
            variety = HpVariety(p)
            for _ in range(self.dense_samples):
                graph = LabeledGraph.fromGenerators(randomGenerators(rng, self.alphabet), self.alphabet)
                if variety.isDense(graph, cross_check=False) != quotient.isFullImage(graph.generators()):
                    disagreements += 1
        order = len(MagnusQuotient(3, self.alphabet.size).enumerate())
        return "0 disagreements, order 972", "%d disagreements, order %d" % (disagreements, order), \
               disagreements == 0 and order == 972

    def fringe(self) -> Outcome:
        """
        Fringe members are surjective images and closures lie in the fringe.
        """
        graph = self.graph("baB,bbA")
        fringe = Fringe.of(graph)
        in_fringe = all(self.factory.create(v).calcClosure(graph).graph in fringe for v in ("gp:2", "gp:3", "hp:3", "hp:5"))
        su = self.factory.create("su")
        closure = su.calcClosure(graph).graph
        below = all(closure <= c.graph for c in su.closures.values())
        return "closures in fringe True, su below hp True", "closures in fringe %s, su below hp %s" % (
            in_fringe, below), in_fringe and below

    def oracle(self) -> Outcome:
        """
        The lemma checks on the catalog and the classification of some well known groups.
        """
        rows = LemmaVerifier.verifyCatalog(GroupCatalog(self.max_order))
        failed = [g + ":" + c for g, c, ok in rows if not ok]
        groups = [FiniteGroup.fromPermutationGroup(SymmetricGroup(3), "S3"), FiniteGroup.cyclic(12),
                  FiniteGroup.dihedral(4), FiniteGroup.fromPermutationGroup(AlternatingGroup(4), "A4"),
                  FiniteGroup.fromPermutationGroup(SymmetricGroup(4), "S4")]
        classes = ",".join(g.name + "=" + str(g.isSupersolvable()) for g in groups)
        expected = "0 failed lemma checks, S3=True,Z12=True,D4=True,A4=False,S4=False"
        return expected, "%d failed lemma checks, %s" % (len(failed), classes), \
               "%d failed lemma checks, %s" % (len(failed), classes) == expected

    def headline(self) -> Outcome:
        """
        Supersolvable closures are finitely generated: the emitted basis has rank E - V + 1 generators.
        """
        bad = []
        for gens in ("aaa", "aa", "a,b", "baB,bbA", "ab"):
            closure = self.factory.create("su").calcClosure(self.graph(gens))
            graph = closure.graph
            if not len(closure.generators()) == graph.rank() == len(graph.edges) - graph.vertex_count + 1:
                bad.append(gens)
        return "all bases of rank E - V + 1", "all bases of rank E - V + 1" if not bad else "failed: " + \
            ", ".join(bad), len(bad) == 0
