"""Exact graded intersection arithmetic on a numerically presented threefold.

A smooth projective threefold is modelled by its divisor lattice: generator
names, the symmetric trilinear intersection form ``T[i][j][k] = g_i.g_j.g_k``,
and the tangent classes c1(X) and c2(X).  Cycle classes live in three graded
pieces:

* ``DivClass``    codimension 1, a coefficient vector over the generators;
* ``CurveClass``  codimension 2, identified with its vector of intersection
  numbers against the generators (numerical equivalence);
* ``PointClass``  codimension 3, a single rational degree.

All coefficients are exact rationals and every value is immutable, so the
operations below are pure functions that can be shared freely between
threads.  Integrality of classes is never enforced here; where it matters
(the optional curve lattice) a warning is emitted instead.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AsymmetricForm, DimensionMismatch, IntegralityWarning
from .rationals import rat, rat_str, rats


def _check_len(label: str, got: int, want: int) -> None:
    if got != want:
        raise DimensionMismatch(f"{label} has length {got}, expected {want}")


@dataclass(frozen=True)
class DivClass:
    """Codimension-1 class: coefficients over the divisor generators."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", rats(self.coeffs))

    @classmethod
    def zero(cls, m: int) -> DivClass:
        return cls((Fraction(0),) * m)

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: DivClass) -> DivClass:
        _check_len("divisor class", len(other), len(self))
        return DivClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivClass) -> DivClass:
        return self + (-other)

    def __neg__(self) -> DivClass:
        return DivClass(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: int | str | Fraction) -> DivClass:
        s = rat(scalar)
        return DivClass(tuple(a * s for a in self.coeffs))

    __rmul__ = __mul__


@dataclass(frozen=True)
class CurveClass:
    """Codimension-2 class: intersection numbers against the generators."""

    pairings: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairings", rats(self.pairings))

    @classmethod
    def zero(cls, m: int) -> CurveClass:
        return cls((Fraction(0),) * m)

    def __len__(self) -> int:
        return len(self.pairings)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.pairings)

    def __add__(self, other: CurveClass) -> CurveClass:
        _check_len("curve class", len(other), len(self))
        return CurveClass(tuple(a + b for a, b in zip(self.pairings, other.pairings)))

    def __sub__(self, other: CurveClass) -> CurveClass:
        return self + (-other)

    def __neg__(self) -> CurveClass:
        return CurveClass(tuple(-a for a in self.pairings))

    def __mul__(self, scalar: int | str | Fraction) -> CurveClass:
        s = rat(scalar)
        return CurveClass(tuple(a * s for a in self.pairings))

    __rmul__ = __mul__


@dataclass(frozen=True)
class PointClass:
    """Codimension-3 class: a rational degree."""

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", rat(self.value))

    def __add__(self, other: PointClass) -> PointClass:
        return PointClass(self.value + other.value)

    def __sub__(self, other: PointClass) -> PointClass:
        return PointClass(self.value - other.value)

    def __neg__(self) -> PointClass:
        return PointClass(-self.value)

    def __mul__(self, scalar: int | str | Fraction) -> PointClass:
        return PointClass(self.value * rat(scalar))

    __rmul__ = __mul__


@dataclass(frozen=True)
class Threefold:
    """Numerical model of a smooth projective threefold.

    ``T`` is the dense m*m*m trilinear intersection form on the divisor
    generators; it must be symmetric under all six index permutations
    (asymmetric input is an error, never silently symmetrized).  The
    optional ``curve_lattice`` lists integral generators of the allowed
    codimension-2 classes; consistency of c2(X) with that lattice is
    checked with a warning, not an error, since intermediate classes are
    genuinely fractional.
    """

    generator_names: tuple[str, ...]
    T: tuple[tuple[tuple[Fraction, ...], ...], ...]
    c1X: DivClass
    c2X: CurveClass
    curve_lattice: tuple[CurveClass, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.generator_names)


def make_threefold(
    generators: Sequence[str],
    T: Sequence[Sequence[Sequence[int | str | Fraction]]],
    c1X: Sequence[int | str | Fraction] | DivClass,
    c2X: Sequence[int | str | Fraction] | CurveClass,
    curve_lattice: Sequence[Sequence[int | str | Fraction] | CurveClass] | None = None,
) -> Threefold:
    """Validate and build a Threefold from raw vectors and a dense form."""
    names = tuple(str(g) for g in generators)
    m = len(names)
    if m < 1:
        raise DimensionMismatch("a threefold model needs at least one divisor generator")

    _check_len("trilinear form", len(T), m)
    rows: list[tuple[tuple[Fraction, ...], ...]] = []
    for plane in T:
        _check_len("trilinear form", len(plane), m)
        cols = []
        for row in plane:
            _check_len("trilinear form", len(row), m)
            cols.append(rats(row))
        rows.append(tuple(cols))
    form = tuple(rows)

    for i, j, k in itertools.product(range(m), repeat=3):
        base = form[i][j][k]
        for p, q, r in itertools.permutations((i, j, k)):
            if form[p][q][r] != base:
                raise AsymmetricForm(
                    f"T[{i}][{j}][{k}] = {rat_str(base)} but "
                    f"T[{p}][{q}][{r}] = {rat_str(form[p][q][r])}"
                )

    div = c1X if isinstance(c1X, DivClass) else DivClass(tuple(c1X))
    curve = c2X if isinstance(c2X, CurveClass) else CurveClass(tuple(c2X))
    _check_len("c1X", len(div), m)
    _check_len("c2X", len(curve), m)

    lattice: tuple[CurveClass, ...] | None = None
    if curve_lattice is not None:
        gens = []
        for gen in curve_lattice:
            cc = gen if isinstance(gen, CurveClass) else CurveClass(tuple(gen))
            _check_len("curve lattice generator", len(cc), m)
            gens.append(cc)
        lattice = tuple(gens)

    X = Threefold(names, form, div, curve, lattice)
    _warn_if_c2X_outside_lattice(X)
    return X


def _solve_rational_system(
    columns: Sequence[tuple[Fraction, ...]], target: tuple[Fraction, ...]
) -> tuple[Fraction, ...] | bool | None:
    """Solve sum_r x_r * columns[r] = target over the rationals.

    Returns the unique solution vector, ``False`` when the system is
    inconsistent, or ``None`` when it is underdetermined.
    """
    m, k = len(target), len(columns)
    aug = [[columns[r][i] for r in range(k)] + [target[i]] for i in range(m)]
    pivot_cols: list[int] = []
    row = 0
    for col in range(k):
        piv = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        lead = aug[row][col]
        aug[row] = [x / lead for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        row += 1
        if row == m:
            break
    for r in range(m):
        if all(aug[r][c] == 0 for c in range(k)) and aug[r][k] != 0:
            return False
    if len(pivot_cols) < k:
        return None
    solution = [Fraction(0)] * k
    for j, col in enumerate(pivot_cols):
        solution[col] = aug[j][k]
    return tuple(solution)


def _warn_if_c2X_outside_lattice(X: Threefold) -> None:
    if X.curve_lattice is None:
        return
    coords = _solve_rational_system([g.pairings for g in X.curve_lattice], X.c2X.pairings)
    if coords is False:
        warnings.warn(
            "c2X is not a rational combination of the declared curve lattice",
            IntegralityWarning,
            stacklevel=3,
        )
    elif coords is None:
        # Dependent generators: membership is not decided here.
        return
    elif any(x.denominator != 1 for x in coords):
        warnings.warn(
            "c2X is not an integral combination of the declared curve lattice",
            IntegralityWarning,
            stacklevel=3,
        )


def mul_div_div(X: Threefold, a: DivClass, b: DivClass) -> CurveClass:
    """Intersection product of two divisor classes, as a curve class."""
    _check_len("divisor class", len(a), X.m)
    _check_len("divisor class", len(b), X.m)
    pairings = []
    for i in range(X.m):
        total = Fraction(0)
        for j in range(X.m):
            if a.coeffs[j] == 0:
                continue
            for k in range(X.m):
                total += a.coeffs[j] * b.coeffs[k] * X.T[j][k][i]
        pairings.append(total)
    return CurveClass(tuple(pairings))


def pair_div_curve(X: Threefold, a: DivClass, q: CurveClass) -> PointClass:
    """Intersection number of a divisor class with a curve class."""
    _check_len("divisor class", len(a), X.m)
    _check_len("curve class", len(q), X.m)
    return PointClass(sum((ai * qi for ai, qi in zip(a.coeffs, q.pairings)), Fraction(0)))


def triple(X: Threefold, a: DivClass, b: DivClass, c: DivClass) -> PointClass:
    """Triple intersection number of three divisor classes."""
    return pair_div_curve(X, a, mul_div_div(X, b, c))


def todd_genus(X: Threefold) -> Fraction:
    """Euler characteristic of the structure sheaf: c1(X).c2(X) / 24."""
    return pair_div_curve(X, X.c1X, X.c2X).value / 24


def threefold_to_json(X: Threefold) -> dict:
    """Serialize to the documented JSON form, rationals as "p/q" strings."""
    doc: dict = {
        "schema": "1",
        "generators": list(X.generator_names),
        "T": [[[rat_str(x) for x in row] for row in plane] for plane in X.T],
        "c1X": [rat_str(c) for c in X.c1X.coeffs],
        "c2X": [rat_str(c) for c in X.c2X.pairings],
    }
    if X.curve_lattice is not None:
        doc["curve_lattice"] = [[rat_str(c) for c in g.pairings] for g in X.curve_lattice]
    return doc


def threefold_from_json(doc: dict) -> Threefold:
    """Inverse of ``threefold_to_json``; the round trip is bit exact."""
    for key in ("generators", "T", "c1X", "c2X"):
        if key not in doc:
            raise DimensionMismatch(f"threefold document is missing {key!r}")
    return make_threefold(
        doc["generators"],
        doc["T"],
        doc["c1X"],
        doc["c2X"],
        doc.get("curve_lattice"),
    )
