"""Comparison tolerances shared by every module.

Exact identities of the algebra only hold up to rounding, so every test for
"equals zero" or "is real" goes through one :class:`Tolerances` instance.
"""
from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    abs: float = 1e-9
    rel: float = 1e-9
    root: float = 1e-10
    cls: float = 1e-8
    # relative remainder size below which a division counts as exact
    div: float = 1e-8

    def with_(self, **changes) -> "Tolerances":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def small(self, value: float, scale: float = 1.0) -> bool:
        """True when ``value`` is negligible next to ``scale``."""
        return value <= self.abs + self.rel * scale


DEFAULT = Tolerances()
