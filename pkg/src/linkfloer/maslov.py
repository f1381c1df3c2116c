"""Maslov indices of capped relative discs and the even-parity certificate.

A relative disc for ``L = S^1 x gamma`` inside the fiber sum is assembled
from a planar piece in the link complement and capping discs on the
summand side. Its Maslov index is the total framing of the caps minus the
framing defect of the Lagrangian framing relative to the disc
trivialization.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BasisNotSpanning

# Framing of a vanishing (Lefschetz thimble) disc in an elliptic fibration.
VANISHING_DISC_FRAMING = -1
# Two vanishing discs meeting once, smoothed into one disc.
SMOOTHED_VANISHING_PAIR_FRAMING = -2
# Lagrangian framing of gamma given by the pushoff inside the Seifert surface.
SEIFERT_PUSHOFF_DEFECT = -2
# Framing defect of the circle direction, pushoff along the monodromy flow.
MONODROMY_PUSHOFF_DEFECT = 0

C1_EVEN_JUSTIFICATION = (
    "X_L is a homotopy E(2) (two-component link, odd linking number), hence spin; "
    "c1 is an even multiple of the fiber class"
)


class BoundaryLabel(str, enum.Enum):
    FIBER = "fiber"  # boundary is gamma
    CIRCLE = "circle"  # boundary is S^1 x pt


@dataclass(frozen=True)
class FramedDisc:
    cap_framings: tuple[int, ...]
    framing_defect: int
    boundary_label: BoundaryLabel
    degenerate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "cap_framings", tuple(int(c) for c in self.cap_framings))
        object.__setattr__(self, "boundary_label", BoundaryLabel(self.boundary_label))
        if not self.cap_framings and not self.degenerate:
            raise ValueError("a disc needs at least one cap unless declared degenerate")


def maslov_index(d: FramedDisc) -> int:
    return sum(d.cap_framings) - d.framing_defect


def fiber_disc(caps: int = 4) -> FramedDisc:
    """``gamma`` capped by ``caps`` vanishing discs, Seifert-pushoff framing.

    For a trefoil plus one meridian, ``gamma`` bounds a planar piece with
    three punctures at meridians of the knot and one at the extra component.
    """
    return FramedDisc((VANISHING_DISC_FRAMING,) * caps, SEIFERT_PUSHOFF_DEFECT, BoundaryLabel.FIBER)


def circle_disc() -> FramedDisc:
    return FramedDisc(
        (SMOOTHED_VANISHING_PAIR_FRAMING,), MONODROMY_PUSHOFF_DEFECT, BoundaryLabel.CIRCLE
    )


class Parity(str, enum.Enum):
    EVEN = "Even"
    UNVERIFIED = "Unverified"


@dataclass(frozen=True)
class ParityCertificate:
    basis_indices: tuple[int, int]  # (fiber disc, circle disc)
    c1_even: bool
    verdict: Parity
    c1_justification: str = ""

    def __post_init__(self):
        expected = (
            Parity.EVEN
            if all(i % 2 == 0 for i in self.basis_indices) and self.c1_even
            else Parity.UNVERIFIED
        )
        if Parity(self.verdict) is not expected:
            raise ValueError("verdict is inconsistent with the basis indices and c1 parity")
        object.__setattr__(self, "verdict", expected)

    @property
    def is_even(self) -> bool:
        return self.verdict is Parity.EVEN

    def to_dict(self) -> dict:
        return {
            "basis_indices": list(self.basis_indices),
            "c1_even": self.c1_even,
            "c1_justification": self.c1_justification,
            "verdict": self.verdict.value,
        }


def parity_check(
    d_fiber: FramedDisc, d_circle: FramedDisc, c1_even: bool, c1_justification: str = ""
) -> ParityCertificate:
    """Even-Maslov certificate from a pair of discs spanning ``H_1(L)``.

    Changing a class by an absolute class in ``H_2`` moves the index by an
    even amount once ``c1`` is even, so a spanning pair of even discs is
    enough. The two discs may be passed in either order.
    """
    labels = {d_fiber.boundary_label, d_circle.boundary_label}
    if labels != {BoundaryLabel.FIBER, BoundaryLabel.CIRCLE}:
        raise BasisNotSpanning(
            "need one disc bounding gamma and one bounding S^1 x pt, got "
            + ", ".join(sorted(l.value for l in (d_fiber.boundary_label, d_circle.boundary_label)))
        )
    if d_fiber.boundary_label is BoundaryLabel.CIRCLE:
        d_fiber, d_circle = d_circle, d_fiber
    idx = (maslov_index(d_fiber), maslov_index(d_circle))
    even = all(i % 2 == 0 for i in idx) and bool(c1_even)
    return ParityCertificate(
        idx, bool(c1_even), Parity.EVEN if even else Parity.UNVERIFIED, c1_justification
    )
