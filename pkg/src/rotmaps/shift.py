"""Shift permutations on darts.

A rotation map on N vertices of degree d induces a permutation of the N*d
darts, pairing each dart with its partner.  Stored as a permutation it takes
N*d integers; its 0/1 matrix (never materialized here) is unitary and
self-inverse, which is what a coined-walk move step needs.  Dart (v, i) has
index (v-1)*d + i, 1-indexed.
"""

from __future__ import annotations

import dataclasses
import warnings

import numpy as np

from .core import Dart, RotationMatrix, _require_valid, to_full_form
from .exceptions import InconsistentInputWarning, MalformedInputError

__all__ = [
    "ShiftPermutation",
    "build_shift",
    "verify_unitary",
]


@dataclasses.dataclass(frozen=True, eq=False)
class ShiftPermutation:
    """Candidate permutation on the N*d darts of a degree-d graph on N vertices.

    ``images[k-1]`` is the image of dart index k.  Construction only checks
    shapes and value ranges; bijectivity and involutivity are checked by
    :func:`verify_unitary`, so defective tables can be represented and
    rejected there.
    """

    num_vertices: int
    degree: int
    images: np.ndarray

    def __post_init__(self):
        if self.num_vertices < 1 or self.degree < 1:
            raise MalformedInputError(
                f"need positive vertex count and degree, got {self.num_vertices}, {self.degree}"
            )
        imgs = np.asarray(self.images)
        size = self.num_vertices * self.degree
        if imgs.ndim != 1 or imgs.size != size:
            raise MalformedInputError(f"need {size} dart images, got shape {imgs.shape}")
        if not np.issubdtype(imgs.dtype, np.integer):
            raise MalformedInputError("dart images must be integers")
        imgs = imgs.astype(np.int64)
        if imgs.min() < 1 or imgs.max() > size:
            raise MalformedInputError(f"dart image outside 1..{size}")
        imgs.setflags(write=False)
        object.__setattr__(self, "images", imgs)

    @property
    def size(self) -> int:
        return self.num_vertices * self.degree

    def dart_index(self, dart) -> int:
        v, i = dart
        if not (1 <= v <= self.num_vertices and 1 <= i <= self.degree):
            raise MalformedInputError(f"dart ({v}, {i}) out of range")
        return (v - 1) * self.degree + i

    def dart_at(self, index: int) -> Dart:
        if not 1 <= index <= self.size:
            raise MalformedInputError(f"dart index {index} outside 1..{self.size}")
        return Dart((index - 1) // self.degree + 1, (index - 1) % self.degree + 1)

    def apply(self, index: int) -> int:
        """Image of a dart index."""
        if not 1 <= index <= self.size:
            raise MalformedInputError(f"dart index {index} outside 1..{self.size}")
        return int(self.images[index - 1])

    def image(self, dart) -> Dart:
        """Image of a dart as a dart."""
        return self.dart_at(self.apply(self.dart_index(dart)))

    @property
    def is_graphical(self) -> bool:
        """True when no dart maps within its own vertex, as any map of a simple graph guarantees."""
        idx = np.arange(self.size)
        return bool(np.all(idx // self.degree != (self.images - 1) // self.degree))


def build_shift(rot: RotationMatrix) -> ShiftPermutation:
    """Shift permutation of a valid rotation map: each dart moves to its partner.

    Warns on a valid-but-inconsistent map: the permutation is still an
    involution, but walk operators built downstream expect consistency.
    """
    report = _require_valid(rot)
    if not report.is_consistent:
        warnings.warn(
            "rotation map is not consistent; the shift is still an involutive "
            "permutation, but walk constructions expect a consistent map",
            InconsistentInputWarning,
            stacklevel=2,
        )
    table = to_full_form(rot)
    images = ((table.entries - 1) * rot.degree + table.ports).ravel()
    return ShiftPermutation(num_vertices=rot.num_vertices, degree=rot.degree, images=images)


def verify_unitary(shift: ShiftPermutation) -> bool:
    """True when the stored images form an involutive permutation.

    Exactly then the corresponding 0/1 matrix on dart space is unitary and
    its own inverse.
    """
    imgs = shift.images
    size = shift.size
    if not np.array_equal(np.sort(imgs), np.arange(1, size + 1)):
        return False
    return bool(np.array_equal(imgs[imgs - 1], np.arange(1, size + 1)))
