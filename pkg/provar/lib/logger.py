import logging
import sys
import traceback


def error(self, msg: str, exit_: bool = True, code: int = 1):
    """
    Log an error and optionally terminate the program

    Parameters
    ----------
    self : Logger
        The logger-object
    msg : str
        Error message to show
    exit_ : bool
        Exit the program after logging. Library code always passes False and raises a ProvarError instead.
    code : int
        The exit status of the program.
    """
    self._error(msg)
    if exit_:
        if self.isEnabledFor(logging.DEBUG):
            traceback.print_stack()
        sys.exit(code)


# stdout is reserved for the JSON and DOT results
logging.basicConfig(level=logging.WARNING, format='%(levelname)s: %(message)s', stream=sys.stderr)
logger = logging.getLogger('provar')
logger._error = logger.error
logger.error = error.__get__(logger, logging.Logger)
