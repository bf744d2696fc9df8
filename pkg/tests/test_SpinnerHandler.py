from unittest import TestCase
from unittest import mock
import logging
from provar.classes.SpinnerHandler import SpinnerHandler


class TestSpinnerHandler(TestCase):
    def setUp(self):
        self.spinner = mock.MagicMock()
        self.handler = SpinnerHandler(self.spinner)

    def record(self, msg: str, **extra) -> logging.LogRecord:
        record = logging.LogRecord("provar", logging.INFO, __file__, 0, msg, None, None)
        for key, value in extra.items():
            setattr(record, key, value)
        return record

    def test_filter(self):
        self.assertFalse(self.handler.filter(self.record("plain")))
        self.assertTrue(self.handler.filter(self.record("start", spinning=True)))

    def test_emit(self):
        self.handler.handle(self.record("Folding...", spinning=True))
        self.assertTrue(self.handler.spinning)
        self.spinner.start.assert_called_once_with("Folding...")
        self.handler.handle(self.record("Scanning...", spinning=True))
        self.assertEqual(self.spinner.text, "Scanning...")
        self.handler.handle(self.record("plain"))
        self.spinner.clear.assert_called_once()
        self.handler.handle(self.record("Done.", spinning=False))
        self.assertFalse(self.handler.spinning)
        self.spinner.stop.assert_called_once()
