"""Type aliases and constants for prvkit."""

import logging
from typing import Dict, List, NewType, Tuple, Union

# Type aliases
# Integer vectors in lattice coordinates of X* (weights) or X_* (coweights)
WeightVec = NewType("WeightVec", Tuple[int, ...])
CoweightVec = NewType("CoweightVec", Tuple[int, ...])
# Dynkin labels: pairings with the simple coroots (or simple roots on the dual side)
Labels = NewType("Labels", Tuple[int, ...])
# Reduced word in simple reflections, 1-based indices
Word = NewType("Word", Tuple[int, ...])
IntMatrix = Tuple[Tuple[int, ...], ...]

CharacterMap = Dict[WeightVec, int]

JSON = Union[Dict[str, "JSON"], List["JSON"], str, int, float, bool, None]

# Constants
SUPPORTED_FAMILIES = "ABCDEFG"
TORUS_LETTER = "T"
SIMPLY_CONNECTED = "simply_connected"
ADJOINT = "adjoint"
TORUS = "torus"
EXPLICIT = "explicit"
FORMS = (SIMPLY_CONNECTED, ADJOINT, TORUS, EXPLICIT)

# Log levels
LOGLEVELS = {
    "critical": logging.CRITICAL,
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "warning": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}
