import argparse
import logging
import os
import sys
import provar as pv
from provar.lib.logger import logger
from pyfiglet import Figlet
from rich import console, markdown

PRINTERS = {"fold": pv.printGraph, "intersect": pv.printGraph, "join": pv.printGraph, "export": pv.printGraph,
            "schreier": pv.printSchreier, "member": pv.printDense, "dense": pv.printDense,
            "closure": pv.printClosure, "fringe": pv.printFringe}

EPILOG = """exit status:
  0  success, also for a closure of nil or su whose prime scan ran up to --max-prime without a stable
     intersection: the result is an upper bound with status SOUND_UPPER and a PolicyExhausted certificate
  1  negative answer with --exit-status
  2  invalid input or configuration
  3  a cap of the fringe enumeration or the group order was exceeded
  4  a certificate or a verification failed"""


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="provar.py", description="Stallings graphs and pro-V closures of "
                                                                   "finitely generated subgroups of free groups",
                                     epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-c", "--config", dest="config", default=None, metavar="config.xml",
                        help="Path to the configuration file. Default is provar_defaults.xml if it exists.")
    parser.add_argument("-l", "--logging", dest="logging", default=None,
                        help="Log level for the application. Possible levels are DEBUG, INFO, WARNING, ERROR.")
    parser.add_argument("--verbose", action="store_true", dest="verbose", help="Shorthand for --logging INFO.")
    parser.add_argument("-v", "--version", action="version", version="provar version 1.0.0",
                        help="Show version information.")
    parser.add_argument("-m", "--manual", action="store_true", dest="manual",
                        help="Print the user manual from the readme.")

    # options shared by all commands
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-a", "--alphabet", dest="alphabet", default="ab",
                        help="The symbols of the alphabet or their number. Default is 'ab'.")
    common.add_argument("-f", "--format", dest="format", choices=["json", "text", "dot"], default=None,
                        help="Output format. Default is taken from the configuration.")
    common.add_argument("-i", "--input", dest="input", default=None, metavar="subgroups.txt",
                        help="Read subgroups from a file with one comma-separated word list per line.")
    common.add_argument("--exit-status", action="store_true", dest="exit_status",
                        help="Exit with status 1 if the answer is negative.")
    common.add_argument("--cross-check", action="store_true", dest="cross_check",
                        help="Verify results by independent computations.")
    common.add_argument("--fringe-cap", type=int, dest="fringe_cap", default=None,
                        help="Maximum number of vertices of a graph whose fringe is enumerated.")
    common.add_argument("--fringe-members", type=int, dest="fringe_members", default=None,
                        help="Maximum number of fringe members.")
    common.add_argument("--primes", dest="primes", default=None, metavar="2,3,5,7",
                        help="Primes which are always scanned for the varieties nil and su.")
    common.add_argument("--window", type=int, dest="window", default=None,
                        help="Number of consecutive primes without change which end a prime scan.")
    common.add_argument("--max-prime", type=int, dest="max_prime", default=None,
                        help="Largest prime of a prime scan. Reaching it without a stable intersection gives a "
                             "SOUND_UPPER closure with a PolicyExhausted warning and exit status 0.")
    common.add_argument("--max-order", type=int, dest="max_order", default=None,
                        help="Maximum order of the groups used for separation and verification (at most 64).")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    helps = {"fold": "Fold generators to the reduced graph of the subgroup.",
             "schreier": "Compute a spanning tree, a Schreier transversal and a Schreier basis.",
             "intersect": "Intersect two subgroups.", "join": "Join two subgroups.",
             "fringe": "Enumerate the fringe of a subgroup.",
             "dense": "Decide the denseness of a subgroup in the pro-V topology.",
             "closure": "Compute the closure of a subgroup in the pro-V topology.",
             "export": "Export the graph of a subgroup.",
             "verify": "Check the finite group lemmas on small groups, or search a separating homomorphism."}
    for command in ("fold", "schreier", "intersect", "join", "fringe", "dense", "closure", "export", "verify"):
        sub = subparsers.add_parser(command, parents=[common], help=helps[command])
        sub.add_argument("subgroups", nargs="*", metavar="words",
                         help="A subgroup given by comma-separated generators, e.g. 'baB,bbA'.")
        if command in ("dense", "closure", "verify"):
            sub.add_argument("--variety", dest="variety", default=None,
                             help="The variety: ab:d, gp:p, hp:p, nil or su.")
        if command in ("closure", "verify"):
            sub.add_argument("-w", "--word", dest="word", default=None, help="A word to test against the closure.")
        if command == "schreier":
            sub.add_argument("--strategy", dest="strategy", choices=["bfs", "dfs"], default="bfs",
                             help="The spanning tree strategy.")
        if command == "export":
            sub.add_argument("-o", "--output", dest="output", default=None, help="Write to a file.")
    sub = subparsers.add_parser("member", parents=[common], help="Decide the membership of a word in a subgroup.")
    sub.add_argument("items", nargs="+", metavar="words", help="The subgroup followed by the word.")
    sub = subparsers.add_parser("reproduce", parents=[common], help="Run the acceptance suite.")
    sub.add_argument("--only", dest="only", default=None,
                     help="Run a single check, given by its name or by one of the aliases figure1, section232, "
                          "figure3 and figure4.")
    sub.add_argument("--json", action="store_true", dest="json", help="Print a machine-readable report.")
    return parser


def main(argv) -> int:
    args = buildParser().parse_args(argv)

    # Print manual from README.md
    if args.manual:
        console_ = console.Console()
        with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), "README.md")) as readme:
            console_.print(markdown.Markdown(readme.read()))
        return 0

    if args.command == "member":
        if len(args.items) < 2 and getattr(args, "input", None) is None:
            logger.error("Command 'member' needs a subgroup and a word.", code=2)
        args.word = args.items[-1]
        args.subgroups = args.items[:-1]
    if args.command == "reproduce":
        args.format = "json" if args.json else "text"
    level = "INFO" if args.verbose and args.logging is None else args.logging
    level = logging.WARNING if level is None else getattr(logging, level.upper(), logging.WARNING)

    try:
        config = args.config
        if config is None and os.path.exists("provar_defaults.xml"):
            config = "provar_defaults.xml"
        job = pv.JobSpec.fromArgs(args, pv.Configuration(config))

        interactive = job.output_format == "text" and sys.stdout.isatty()
        if interactive:
            # Print title
            f = Figlet(font='slant')
            print("")
            print(f.renderText('provar'))

        res = pv.provar(job, level, interactive).run()
    except pv.ProvarError as e:
        logger.error(str(e), exit_=False)
        return e.exit_code

    # Print the results
    if job.output_format == "dot":
        text = res.graph.toDot()
    elif job.output_format == "json":
        text = pv.toJson(res.payload) + "\n"
    else:
        text = None
        if res.command == "reproduce":
            pv.printReport(res.payload["checks"])
        elif res.command == "verify":
            if "separation" in res.payload:
                print(res.payload["separation"]["status"])
            else:
                pv.printVerify([(r["group"], r["check"], r["passed"]) for r in res.payload["checks"]])
        else:
            PRINTERS[res.command](res.payload)
    if text is not None:
        if getattr(args, "output", None) is not None:
            with open(args.output, "w") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    return res.code


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
