import logging as log
from typing import Optional
from .JobSpec import JobSpec
from .LabeledGraph import LabeledGraph
from .Reproduction import Reproduction
from .SchreierData import SchreierData
from .SpinnerHandler import SpinnerHandler
from .lattice.Fringe import Fringe
from .oracle.GroupCatalog import GroupCatalog
from .oracle.LemmaVerifier import LemmaVerifier
from .oracle.SeparationOracle import SeparationOracle
from .variety.ClosureResult import EXACT
from .variety.VarietyFactory import VarietyFactory
from ..lib.exceptions import CertificateFailure
from ..lib.logger import logger


class JobResult:
    """
    The outcome of a job: the JSON payload, the graph for DOT export if there is one and the exit status.
    """

    def __init__(self, command: str, payload: dict, graph: Optional[LabeledGraph] = None, code: int = 0):
        self.command = command
        self.payload = payload
        self.graph = graph
        self.code = code


def graphPayload(graph: LabeledGraph) -> dict:
    return {"graph": graph.toJson(), "generators": [str(w) for w in graph.generators()], "rank": graph.rank(),
            "index": graph.index()}


class provar:
    """
    Top level class running a single command on subgroups of a free group
    """

    def __init__(self, job: JobSpec, logging: int = log.WARNING, spin: bool = False):
        """
        Initialize a new run

        Parameters
        ----------
        job : JobSpec
            The validated command to run.
        logging : int
            Loglevel from package logging
        spin : bool
            Show a spinner during computations
        """
        self.job = job
        self.__logging = logging
        self.__spin = spin
        self.factory = VarietyFactory(job.policy, job.max_vertices, job.max_members, job.cross_check)

    def run(self) -> JobResult:
        """
        Run the command of the job.

        Returns
        -------
        res : JobResult
            The result of the command. The exit status is 1 for a negative answer if the job asks for it, 4 if a
            verification failed and 0 otherwise.
        """
        logger.setLevel(log.WARNING if self.__logging is None else self.__logging)
        handler = None
        if self.__spin:
            handler = SpinnerHandler()
            logger.addHandler(handler)
        try:
            logger.info("Running '" + self.job.command + "'...", extra={"spinning": True})
            res = getattr(self, "_" + self.job.command)()
            logger.info("Finished.", extra={"spinning": False})
        finally:
            if handler is not None:
                if handler.spinning:
                    logger.info("Aborted.", extra={"spinning": False})
                logger.removeHandler(handler)
        return res

    def __negative(self, flag: bool) -> int:
        return 1 if self.job.exit_status and not flag else 0

    def _fold(self) -> JobResult:
        graph = self.job.subgroups[0]
        return JobResult("fold", graphPayload(graph), graph)

    def _export(self) -> JobResult:
        graph = self.job.subgroups[0]
        return JobResult("export", graphPayload(graph), graph)

    def _member(self) -> JobResult:
        member = self.job.subgroups[0].contains(self.job.word)
        return JobResult("member", {"word": str(self.job.word), "member": member}, code=self.__negative(member))

    def _schreier(self) -> JobResult:
        graph = self.job.subgroups[0]
        data = SchreierData(graph, SchreierData.spanningTree(graph, self.job.strategy))
        payload = data.toJson()
        payload["graph"] = graph.toJson()
        return JobResult("schreier", payload, graph)

    def _intersect(self) -> JobResult:
        graph = self.job.subgroups[0] & self.job.subgroups[1]
        return JobResult("intersect", graphPayload(graph), graph)

    def _join(self) -> JobResult:
        graph = self.job.subgroups[0] | self.job.subgroups[1]
        return JobResult("join", graphPayload(graph), graph)

    def _fringe(self) -> JobResult:
        fringe = Fringe.of(self.job.subgroups[0], self.job.max_vertices, self.job.max_members)
        return JobResult("fringe", {"members": fringe.toJson(), "size": len(fringe)})

    def _dense(self) -> JobResult:
        dense = self.factory.create(self.job.variety).isDense(self.job.subgroups[0])
        return JobResult("dense", {"variety": str(self.job.variety), "dense": dense}, code=self.__negative(dense))

    def _closure(self) -> JobResult:
        graph = self.job.subgroups[0]
        result = self.factory.create(self.job.variety).calcClosure(graph)
        payload = result.toJson()
        code = 0
        oracle = None
        if self.job.cross_check:
            logger.info("Checking the closure against small groups...", extra={"spinning": True})
            oracle = SeparationOracle(self.job.max_order)
            hom = oracle.checkClosure(graph.generators(), result.generators(), self.job.variety)
            if hom is not None:
                msg = "The closure is not mapped into the image of the subgroup by " + str(hom) + "."
                if result.status == EXACT:
                    logger.error(msg, exit_=False)
                    raise CertificateFailure(msg)
                logger.warning(msg)
        if self.job.word is not None:
            member = result.graph.contains(self.job.word)
            payload["member"] = member
            if not member:
                oracle = SeparationOracle(self.job.max_order) if oracle is None else oracle
                payload["separation"] = oracle.status(self.job.word, graph.generators(), self.job.variety).toJson()
            code = self.__negative(member)
        return JobResult("closure", payload, result.graph, code)

    def _verify(self) -> JobResult:
        if len(self.job.subgroups) > 0:
            separation = SeparationOracle(self.job.max_order).status(
                self.job.word, self.job.subgroups[0].generators(), self.job.variety)
            return JobResult("verify", {"word": str(self.job.word), "variety": str(self.job.variety),
                                        "separation": separation.toJson()})
        rows = LemmaVerifier.verifyCatalog(GroupCatalog(self.job.max_order))
        passed = all(r[2] for r in rows)
        payload = {"max_order": self.job.max_order, "passed": passed,
                   "checks": [{"group": g, "check": c, "passed": ok} for g, c, ok in rows]}
        return JobResult("verify", payload, code=0 if passed else CertificateFailure.exit_code)

    def _reproduce(self) -> JobResult:
        rows = Reproduction(self.job.policy, self.job.max_order).run(self.job.only)
        passed = all(r["passed"] for r in rows)
        return JobResult("reproduce", {"checks": rows, "passed": passed},
                         code=0 if passed else CertificateFailure.exit_code)
