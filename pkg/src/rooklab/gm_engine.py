"""Generic involution-principle transport between the fixed sets of two signed sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .errors import (
    InvolutionViolation,
    IterationCapExceeded,
    NotFixedPoint,
    SignViolation,
)

__all__ = ["SignedSet", "TransportTrace", "gm_transport", "fixed_point_map"]


@dataclass(frozen=True)
class SignedSet:
    """A finite set with a sign and a sign-reversing involution.

    ``elements`` is a zero-argument callable so large sets are only
    materialized when asked for.  ``size`` may be given to avoid that.
    """

    elements: Callable[[], Iterable[Any]]
    sign: Callable[[Any], int]
    involution: Callable[[Any], Any]
    is_fixed: Callable[[Any], bool]
    size: int | None = None

    def cardinality(self) -> int:
        if self.size is not None:
            return self.size
        return sum(1 for _ in self.elements())

    def fixed_points(self) -> list:
        return [x for x in self.elements() if self.is_fixed(x)]


@dataclass
class TransportTrace:
    """Elements visited during one transport.

    ``steps`` holds ``(side, element)`` pairs, ``side`` being ``"source"`` or
    ``"target"``.  ``len()`` is the number of times the walk landed in the
    target through the bijection, so an immediately fixed image has length 1.
    """

    start: Any
    steps: list = field(default_factory=list)

    def __len__(self):
        return self.landings

    @property
    def landings(self) -> int:
        return sum(1 for side, tag, _ in self.steps if side == "target" and tag == "f")

    def elements(self) -> list:
        return [x for _, _, x in self.steps]


def _verify(space: SignedSet, x, where: str):
    y = space.involution(x)
    if space.involution(y) != x:
        raise InvolutionViolation(f"involution is not self-inverse at {where} element {x!r}")
    if space.is_fixed(x):
        if y != x:
            raise InvolutionViolation(f"fixed {where} element {x!r} is moved by the involution")
        if space.sign(x) != 1:
            raise SignViolation(f"fixed {where} element {x!r} has negative sign")
    elif space.sign(y) != -space.sign(x):
        raise SignViolation(f"involution does not reverse the sign of {where} element {x!r}")


def gm_transport(
    source: SignedSet,
    target: SignedSet,
    f: Callable[[Any], Any],
    f_inv: Callable[[Any], Any],
    t,
    check: bool = False,
    cap: int | None = None,
):
    """Map a fixed point of ``source`` to a fixed point of ``target``.

    Returns ``(image, trace)``.  With ``check`` the involution and sign
    axioms are verified on every visited element.
    """
    if not source.is_fixed(t):
        raise NotFixedPoint(f"{t!r} is not a fixed point of the source involution")
    if cap is None:
        cap = 2 * source.cardinality()
    trace = TransportTrace(t)
    x = f(t)
    trace.steps.append(("target", "f", x))
    if check:
        _verify(source, t, "source")
        if source.sign(t) != target.sign(x):
            raise SignViolation("bijection does not preserve sign")
    loops = 0
    while not target.is_fixed(x):
        loops += 1
        if loops > cap:
            raise IterationCapExceeded(f"no fixed point reached after {cap} iterations")
        y = target.involution(x)
        z = f_inv(y)
        w = source.involution(z)
        nxt = f(w)
        if check:
            _verify(target, x, "target")
            _verify(source, z, "source")
            if f(z) != y or target.sign(y) != source.sign(z):
                raise SignViolation("bijection is not a sign-preserving inverse pair")
            if source.sign(w) != target.sign(nxt):
                raise SignViolation("bijection does not preserve sign")
        trace.steps.extend(
            [("target", "I", y), ("source", "f_inv", z), ("source", "I", w), ("target", "f", nxt)]
        )
        x = nxt
    return x, trace


def fixed_point_map(source: SignedSet, target: SignedSet, f, f_inv, check: bool = False) -> dict:
    """The whole induced map on fixed points, as a dict."""
    cap = 2 * source.cardinality()
    return {
        t: gm_transport(source, target, f, f_inv, t, check=check, cap=cap)[0]
        for t in source.fixed_points()
    }
