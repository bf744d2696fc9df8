import json
from typing import List, Tuple
from rich.console import Console
from rich.table import Table


def toJson(payload) -> str:
    """
    Serialize a result with sorted keys. Identical results always give identical strings.

    Parameters
    ----------
    payload : dict
        The result to serialize.

    Returns
    -------
    text : str
        The JSON string.
    """
    return json.dumps(payload, sort_keys=True, indent=2)


def _table(*columns: str) -> Table:
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("#", style="dim", width=4, justify="center")
    for column in columns:
        table.add_column(column)
    return table


def _print(*renderables):
    console = Console()
    console.print("")
    for r in renderables:
        console.print(r)


def _verdict(flag: bool) -> str:
    return "[green]PASS[/green]" if flag else "[red]FAIL[/red]"


def printGraph(payload: dict):
    """
    Print a reduced graph with its generators.

    Parameters
    ----------
    payload : dict
        A result holding the JSON representation of the graph in 'graph' and optionally the keys 'generators', 'rank'
        and 'index'.
    """
    graph = payload["graph"]
    table = _table("From", "Label", "To")
    for i, edge in enumerate(graph["edges"]):
        table.add_row(str(i), str(edge["from"]), edge["label"], str(edge["to"]))
    lines = ["Vertices: %d (base %d)" % (graph["vertices"], graph["base"])]
    if "rank" in payload:
        lines.append("Rank: %d" % payload["rank"])
    if "index" in payload:
        lines.append("Index: " + ("infinite" if payload["index"] is None else str(payload["index"])))
    if "generators" in payload:
        lines.append("Generators: {" + ", ".join(payload["generators"]) + "}")
    _print(table, *lines)


def printSchreier(payload: dict):
    """
    Print the transversal and the basis of a spanning tree.
    """
    table = _table("Transversal")
    for v, w in enumerate(payload["transversal"]):
        table.add_row(str(v), w)
    _print(table, "Tree edges: " + ", ".join(str(e) for e in payload["tree"]),
           "Basis: {" + ", ".join(payload["basis"]) + "}")


def printClosure(payload: dict):
    """
    Print a closure together with its certificates.

    Parameters
    ----------
    payload : dict
        The JSON representation of a ClosureResult.
    """
    table = _table("Certificate")
    for i, c in enumerate(payload["certificates"]):
        table.add_row(str(i), c)
    lines = ["Variety: " + payload["variety"], "Status: " + payload["status"]]
    if len(payload["primes_used"]) > 0:
        lines.append("Primes used: " + ", ".join(str(p) for p in payload["primes_used"]))
    lines.append("Generators: {" + ", ".join(payload["generators"]) + "}")
    if "member" in payload:
        lines.append("Word in closure: " + str(payload["member"]))
    if "separation" in payload:
        lines.append("Separation: " + payload["separation"]["status"])
    _print(table, *lines)


def printDense(payload: dict):
    """
    Print the outcome of a denseness or membership decision.
    """
    key = "dense" if "dense" in payload else "member"
    table = _table("Query", "Result")
    table.add_row("1", payload.get("variety", payload.get("word", "")), str(payload[key]).lower())
    _print(table)


def printFringe(payload: dict):
    """
    Print the members of a fringe.
    """
    table = _table("Vertices", "Generators", "Witness")
    for i, member in enumerate(payload["members"]):
        table.add_row(str(i), str(member["graph"]["vertices"]), ", ".join(member["generators"]),
                      " ".join(str(v) for v in member["witness"]))
    _print(table, "Members: %d" % payload["size"])


def printReport(rows: List[dict]):
    """
    Print the report of the acceptance suite.

    Parameters
    ----------
    rows : List[dict]
        The checks with the keys 'check', 'expected', 'actual' and 'passed'.
    """
    table = _table("Check", "Expected", "Actual", "Result")
    for i, row in enumerate(rows):
        table.add_row(str(i), row["check"], row["expected"], row["actual"], _verdict(row["passed"]))
    _print(table)


def printVerify(rows: List[Tuple[str, str, bool]]):
    """
    Print the outcome of the lemma checks on the group catalog.
    """
    table = _table("Group", "Check", "Result")
    for i, (group, check, passed) in enumerate(rows):
        table.add_row(str(i), group, check, _verdict(passed))
    _print(table)
