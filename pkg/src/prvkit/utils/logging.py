"""Logging, colored output and the exit-code carrying exceptions of prvkit."""

import logging
import os
import shlex
import sys
from typing import Sequence

import colors  # type: ignore

_LOGGING_FORMAT = "%(asctime)s %(module)s %(levelname)s: %(message)s"

# Updated from --color by configure_logging()
COLOR_STDOUT: bool = os.isatty(1)
COLOR_STDERR: bool = os.isatty(2)


def set_color_mode(mode: str):
    """'always' and 'never' force colors on or off; 'auto' follows the terminal unless NO_COLOR is set."""
    global COLOR_STDOUT, COLOR_STDERR
    if mode == "auto":
        plain = bool(os.environ.get("NO_COLOR"))
        COLOR_STDOUT = os.isatty(1) and not plain
        COLOR_STDERR = os.isatty(2) and not plain
    else:
        COLOR_STDOUT = COLOR_STDERR = mode == "always"


def configure_logging(level: int, color: str = "auto"):
    logging.basicConfig(format=_LOGGING_FORMAT, level=level, force=True)
    set_color_mode(color)


def fmt(s: str, *args, color: bool = False, fg=None, bg=None, style=None, **kwargs) -> str:
    """str.format with an optional ansicolors wrapper around the template."""
    s = colors.color(s, fg=fg, bg=bg, style=style) if color else s
    return s.format(*args, **kwargs)


def cout(*args, **kwargs):
    return sys.stdout.write(fmt(*args, color=COLOR_STDOUT, **kwargs))


def _log(fn, *args, **kwargs):
    return fn("%s", fmt(*args, color=COLOR_STDERR, **kwargs))


def debug(*args, **kwargs):
    return _log(logging.debug, *args, fg="green", **kwargs)


def info(*args, **kwargs):
    return _log(logging.info, *args, fg="green", **kwargs)


def warning(*args, **kwargs):
    return _log(logging.warning, *args, fg="yellow", **kwargs)


def error(*args, **kwargs):
    return _log(logging.error, *args, fg="red", **kwargs)


def replay_command(argv: Sequence[str]) -> str:
    """The shell line that reproduces a record, e.g. prvkit prv --type A2 --w 's1 s2'."""
    return shlex.join(["prvkit", *argv])


class ExitException(BaseException):
    """Raised to stop prvkit; main() logs the message and exits with exit_code."""
    exit_code = 1

    def __init__(self, fmt, *args, **kwargs):
        super().__init__(fmt.format(*args, **kwargs))


class UsageError(ExitException):
    """Bad input: malformed weights, unknown labels, unsupported types."""
    exit_code = 2


class CapExceededError(UsageError):
    """A Weyl-group or oracle size cap would be exceeded."""


class ViolationError(ExitException):
    """A property that is supposed to hold failed."""


class WindowError(ExitException):
    """A truncation window is too narrow for the requested computation."""


class SingularError(ExitException):
    """A Laurent matrix is not invertible where invertibility is required."""
