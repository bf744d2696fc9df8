import logging
import sys
from typing import Optional
import halo


class SpinnerHandler(logging.Handler):
    """
    A handler for the logging-package showing a spinner while a long computation (folding a fringe, scanning primes,
    enumerating homomorphisms) is running.

    The spinner is started by a log-message with the extra-key 'spinning':
    logger.info("Computing fringe...", extra={"spinning": True})
    logger.info("Fringe computed.", extra={"spinning": False})
    """

    def __init__(self, spinner: Optional[halo.Halo] = None, level: int = logging.NOTSET):
        """
        Initialize a new spinner handler

        Parameters
        ----------
        spinner : Halo
            The spinner to show. A spinner on stderr is created if omitted.
        level : int
            The logging level of this handler.
        """
        super(SpinnerHandler, self).__init__(level)
        self._spinner = spinner if spinner is not None else halo.Halo(spinner="dots", stream=sys.stderr)
        self._spinning = False

    @property
    def spinning(self) -> bool:
        return self._spinning

    def filter(self, record):
        """
        Check if this handler should be applied on the given log record.

        Parameters
        ----------
        record : LogRecord
            The log record to be checked

        Returns
        -------
        res : bool
            True if this handler should be applied on the given log record, otherwise False.
        """
        if hasattr(record, 'spinning'):
            return True
        return self._spinning

    def __start(self, text: str):
        self._spinning = True
        self._spinner.start(text)

    def __stop(self):
        self._spinning = False
        self._spinner.stop()

    def emit(self, record):
        """
        Start, update or stop the spinner according to the given log record. Records without the extra-key only
        clear the spinner line, they are printed by the regular handler.

        Parameters
        ----------
        record : LogRecord
            The log record to be handled.
        """
        state = getattr(record, "spinning", None)
        if state is None:
            if self._spinning:
                self._spinner.clear()
        elif state and not self._spinning:
            self.__start(record.getMessage())
        elif state:
            self._spinner.text = record.getMessage()
        elif self._spinning:
            self.__stop()
