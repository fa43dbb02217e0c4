"""Exact generation of the generalized Tribonacci (G) and Tribonacci-Lucas (S) sequences.

Both sequences obey

    u[n+3] = P*u[n+2] + Q*u[n+1] + R*u[n]

and differ only in their initial terms:

    G: 0, 0, 1
    S: -Q/R, 3, P

List position ``i`` always holds the term with subscript ``i``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingK, ZeroRCoefficient


@dataclass(frozen=True, order=True)
class RecurrenceParams:
    p: int
    q: int
    r: int

    def __post_init__(self):
        for name in ("p", "q", "r"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")

    @property
    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


def _as_params(params) -> RecurrenceParams:
    if isinstance(params, RecurrenceParams):
        return params
    return RecurrenceParams(*params)


def _iterate(params: RecurrenceParams, seed: list[Fraction], count: int) -> list[Fraction]:
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    p, q, r = params.as_tuple
    terms = seed[:count]
    while len(terms) < count:
        terms.append(p * terms[-1] + q * terms[-2] + r * terms[-3])
    return terms


def gen_g(params, count: int) -> list[Fraction]:
    """Return G_0, ..., G_{count-1} as exact rationals (all integral)."""
    params = _as_params(params)
    return _iterate(params, [Fraction(0), Fraction(0), Fraction(1)], count)


def gen_s(params, count: int) -> list[Fraction]:
    """Return S_0, ..., S_{count-1}.

    S_0 = -Q/R is generally not an integer; every later term is.

    Raises
    ------
    ZeroRCoefficient
        If ``params.r == 0``.
    """
    params = _as_params(params)
    if params.r == 0:
        raise ZeroRCoefficient("S is undefined for R = 0")
    seed = [Fraction(-params.q, params.r), Fraction(3), Fraction(params.p)]
    return _iterate(params, seed, count)


def power_sums(params, count: int) -> list[Fraction]:
    """Power sums alpha^k + beta^k + gamma^k of the characteristic roots, k < count.

    Newton's identities give 3, P, P^2 + 2Q and then the shared recurrence.
    Unlike :func:`gen_s` this is defined for R = 0; for R != 0 entry ``k``
    equals S_{k+1}.
    """
    params = _as_params(params)
    p, q, _ = params.as_tuple
    seed = [Fraction(3), Fraction(p), Fraction(p * p + 2 * q)]
    return _iterate(params, seed, count)


class SequenceKind(str, enum.Enum):
    G = "G"
    S = "S"


class PresetName(str, enum.Enum):
    TRIBONACCI = "tribonacci"
    PADOVAN = "padovan"
    FIBONACCI = "fibonacci"
    K_FIBONACCI = "k_fibonacci"
    PELL = "pell"
    JACOBSTHAL = "jacobsthal"
    TRIBONACCI_LUCAS = "tribonacci_lucas"
    PERRIN = "perrin"


_PRESET_TABLE = {
    PresetName.TRIBONACCI: ((1, 1, 1), SequenceKind.G),
    PresetName.PADOVAN: ((0, 1, 1), SequenceKind.G),
    PresetName.FIBONACCI: ((1, 1, 0), SequenceKind.G),
    PresetName.PELL: ((2, 1, 0), SequenceKind.G),
    PresetName.JACOBSTHAL: ((1, 2, 0), SequenceKind.G),
    PresetName.TRIBONACCI_LUCAS: ((1, 1, 1), SequenceKind.S),
    PresetName.PERRIN: ((0, 1, 1), SequenceKind.S),
}


@dataclass(frozen=True)
class SequencePreset:
    name: PresetName
    k: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "name", PresetName(self.name))
        if self.k is not None:
            if self.name is not PresetName.K_FIBONACCI:
                raise ValueError(f"k only applies to k_fibonacci, not {self.name.value}")
            if self.k < 1:
                raise ValueError(f"k must be a positive integer, got {self.k}")

    @property
    def kind(self) -> SequenceKind:
        if self.name is PresetName.K_FIBONACCI:
            return SequenceKind.G
        return _PRESET_TABLE[self.name][1]

    @property
    def label(self) -> str:
        if self.name is PresetName.K_FIBONACCI:
            return f"k_fibonacci[k={self.k}]"
        return self.name.value


def resolve_preset(preset: SequencePreset) -> tuple[RecurrenceParams, SequenceKind]:
    """Map a named sequence to its (P, Q, R) triple and sequence kind."""
    if preset.name is PresetName.K_FIBONACCI:
        if preset.k is None:
            raise MissingK("k_fibonacci needs k")
        return RecurrenceParams(preset.k, 1, 0), SequenceKind.G
    triple, kind = _PRESET_TABLE[preset.name]
    return RecurrenceParams(*triple), kind


def all_presets(k_values=(1, 2, 3)) -> list[SequencePreset]:
    """Every named preset, with k-Fibonacci expanded over ``k_values``."""
    out = []
    for name in PresetName:
        if name is PresetName.K_FIBONACCI:
            out.extend(SequencePreset(name, k) for k in k_values)
        else:
            out.append(SequencePreset(name))
    return out
