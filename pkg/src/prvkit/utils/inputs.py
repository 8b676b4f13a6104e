"""Parsing of command-line values: data labels, (co)weights, words and lattice points."""

import os
from typing import Sequence, Tuple

from prvkit.lie.rootdata import (
    RootDatum, build_root_datum, dual_datum, weight_from_labels, weight_from_root_coefficients
)
from prvkit.lie.weylgrp import WeylElement, element_from_word
from prvkit.loop.laurent import parse_matrix
from prvkit.loop.looplattice import LatticePoint, torus_point
from prvkit.utils.logging import UsageError
from prvkit.utils.types import WeightVec

FUNDAMENTAL = "fundamental"
ROOT = "root"
COROOT = "coroot"
LATTICE = "lattice"
# "root" and "coroot" both mean simple-root coefficients of the side the vector lives on
BASES = (FUNDAMENTAL, ROOT, COROOT, LATTICE)


def parse_ints(text: str, what: str = "vector") -> Tuple[int, ...]:
    """'1,0,-2' -> (1, 0, -2); an empty string is the empty vector."""
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError("Malformed {} {!r}: expected comma-separated integers", what, text)


def datum_from_args(args) -> RootDatum:
    return build_root_datum(args.type, args.form)


def read_weight(d: RootDatum, text: str, basis: str = FUNDAMENTAL, what: str = "weight") -> WeightVec:
    """A weight of `d` in lattice coordinates, read in the given basis."""
    coords = parse_ints(text, what)
    if basis == LATTICE:
        if len(coords) != d.rank:
            raise UsageError("{} {} has length {}, expected rank {} of {}", what, coords, len(coords), d.rank,
                             d.label)
        return WeightVec(coords)
    if len(coords) != d.n_simple + d.torus_rank:
        raise UsageError("{} {} has length {}, expected {} for {}", what, coords, len(coords),
                         d.n_simple + d.torus_rank, d.label)
    semisimple, torus = coords[:d.n_simple], coords[d.n_simple:]
    if basis == FUNDAMENTAL:
        return weight_from_labels(d, semisimple, torus)
    if basis in (ROOT, COROOT):
        base = list(weight_from_root_coefficients(d, semisimple))
        for k, t in enumerate(torus):
            base[d.rank - d.torus_rank + k] += t
        return WeightVec(tuple(base))
    raise UsageError("Unknown basis {!r}; choose from {}", basis, ", ".join(BASES))


def read_coweight(d: RootDatum, text: str, basis: str = FUNDAMENTAL) -> WeightVec:
    """Coweights of `d` are the weights of its dual datum."""
    return read_weight(dual_datum(d), text, basis, "coweight")


def read_weights(d: RootDatum, texts: Sequence[str], basis: str, what: str = "weight"):
    return [read_weight(d, t, basis, what) for t in texts]


def read_word(d: RootDatum, text: str) -> WeylElement:
    return element_from_word(d, text)


def read_point(text: str) -> LatticePoint:
    """A lattice point: '@file' or '[[...]]' is a matrix representative, '1,0' a coweight of SL_m (m = len + 1)."""
    text = text.strip()
    if text.startswith("@"):
        path = os.path.expanduser(text[1:])
        try:
            with open(path) as f:
                return LatticePoint(parse_matrix(" ".join(f.read().split())), os.path.basename(path))
        except OSError as e:
            raise UsageError("Cannot read matrix file {}: {}", path, e.strerror)
    if text.startswith("["):
        return LatticePoint(parse_matrix(text))
    coords = parse_ints(text, "coweight")
    if not coords:
        raise UsageError("Empty lattice point")
    return torus_point(len(coords) + 1, coords)
