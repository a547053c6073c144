"""Group models and exact algebra backends.

Three backends realize "a scalar-linear combination of group elements":

* Formal  -- the group algebra K[G] proper: a sparse linear combination of
  canonical group elements, multiplied by convolution.  Distinct group
  elements stay linearly independent.
* Matrix  -- a square matrix of exact scalars; sums of group images collapse
  entrywise, so scalar relations like M**2 == -2*I become visible.
* Cyclic  -- the twisted cyclic algebra with basis X^0 .. X^{s-1} and
  relation X^s = twist * X^0; the quotient seen by a representation whose
  generator image has a scalar power.

Group elements are canonical, hashable payloads; every model provides a
total injective `canonical_key` (a string) used as the sparse map key, with
a key -> element registry kept alongside for convolution.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .scalars import (
    ScalarValue,
    as_scalar,
    format_scalar,
    is_unit,
    is_zero,
    scalar_add,
    scalar_invert,
    scalar_mul,
    scalar_neg,
    scalar_pow,
)


class Matrix:
    """Immutable square matrix of exact scalars."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[ScalarValue | int]]):
        normalized = tuple(tuple(as_scalar(entry) for entry in row) for row in rows)
        dim = len(normalized)
        if dim == 0 or any(len(row) != dim for row in normalized):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", normalized)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(dim: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @staticmethod
    def zeros(dim: int) -> "Matrix":
        return Matrix([[0] * dim for _ in range(dim)])

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return Matrix(
            [
                [scalar_add(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[scalar_neg(a) for a in row] for row in self.rows])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        dim = self.dim
        cols = tuple(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc: ScalarValue = Fraction(0)
                for a, b in zip(row, col):
                    acc = scalar_add(acc, scalar_mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def scale(self, s: ScalarValue | int) -> "Matrix":
        return Matrix([[scalar_mul(s, a) for a in row] for row in self.rows])

    def det(self) -> ScalarValue:
        """Exact determinant by cofactor expansion (dimensions here are small)."""
        if self.dim == 1:
            return self.rows[0][0]
        total: ScalarValue = Fraction(0)
        for j, entry in enumerate(self.rows[0]):
            if is_zero(entry):
                continue
            minor = Matrix(
                [
                    [row[k] for k in range(self.dim) if k != j]
                    for row in self.rows[1:]
                ]
            )
            term = scalar_mul(entry, minor.det())
            total = scalar_add(total, term if j % 2 == 0 else scalar_neg(term))
        return total

    def inverse(self) -> "Matrix":
        """Adjugate inverse; requires the determinant to be a unit so the
        result stays inside the scalar ring."""
        d = self.det()
        if not is_unit(d):
            raise ValueError(f"matrix not invertible over the scalar ring (det = {format_scalar(d)})")
        d_inv = scalar_invert(d)
        if self.dim == 1:
            return Matrix([[d_inv]])
        cof = []
        for i in range(self.dim):
            cof_row = []
            for j in range(self.dim):
                minor = Matrix(
                    [
                        [row[k] for k in range(self.dim) if k != j]
                        for r, row in enumerate(self.rows)
                        if r != i
                    ]
                )
                m = minor.det()
                cof_row.append(m if (i + j) % 2 == 0 else scalar_neg(m))
            cof.append(cof_row)
        # adjugate = transpose of cofactor matrix
        return Matrix([[scalar_mul(d_inv, cof[j][i]) for j in range(self.dim)] for i in range(self.dim)])

    def power(self, e: int) -> "Matrix":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        acc = Matrix.identity(self.dim)
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.dim)

    def scalar_multiple_of_identity(self) -> ScalarValue | None:
        """The scalar d with self == d * I, or None."""
        d = self.rows[0][0]
        for i in range(self.dim):
            for j in range(self.dim):
                if i == j:
                    if self.rows[i][j] != d:
                        return None
                elif not is_zero(self.rows[i][j]):
                    return None
        return d

    def text(self) -> str:
        return "[" + ",".join("[" + ",".join(format_scalar(a) for a in row) + "]" for row in self.rows) + "]"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.text()})"


def parse_matrix(text: str) -> Matrix:
    """Read a matrix from text: one row per line, entries comma-separated."""
    from .scalars import parse_scalar

    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([parse_scalar(entry) for entry in line.split(",")])
    if not rows:
        raise ValueError("empty matrix text")
    return Matrix(rows)


# --- group models -------------------------------------------------------------


class GroupModel(ABC):
    """A group with canonical, hashable elements and a total injective key."""

    @abstractmethod
    def identity(self):
        ...

    @abstractmethod
    def multiply(self, g, h):
        ...

    @abstractmethod
    def invert(self, g):
        ...

    @abstractmethod
    def canonical_key(self, g) -> str:
        ...

    def power(self, g, e: int):
        if e < 0:
            g, e = self.invert(g), -e
        acc = self.identity()
        while e:
            if e & 1:
                acc = self.multiply(acc, g)
            g = self.multiply(g, g)
            e >>= 1
        return acc


@dataclass(frozen=True)
class SymmetricGroupModel(GroupModel):
    """S_n with elements stored as image tuples (0-based).

    The product g*h acts as the composite function g after h, which makes
    left-to-right letter products agree with the in-place strand swaps used
    for permutation words.
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")

    def identity(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    def multiply(self, g, h) -> tuple[int, ...]:
        return tuple(g[h[k]] for k in range(self.n))

    def invert(self, g) -> tuple[int, ...]:
        inv = [0] * self.n
        for k, v in enumerate(g):
            inv[v] = k
        return tuple(inv)

    def transposition(self, i: int) -> tuple[int, ...]:
        """Swap of strands i, i+1 (1-based i)."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"transposition index {i} out of range")
        images = list(range(self.n))
        images[i - 1], images[i] = images[i], images[i - 1]
        return tuple(images)

    def canonical_key(self, g) -> str:
        return "[" + ",".join(str(v + 1) for v in g) + "]"


@dataclass(frozen=True)
class FreeAbelianGroupModel(GroupModel):
    """Z^rank with elements stored as exponent tuples."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("need rank >= 1")

    def identity(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def multiply(self, g, h) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(g, h))

    def invert(self, g) -> tuple[int, ...]:
        return tuple(-a for a in g)

    def canonical_key(self, g) -> str:
        if self.rank == 1:
            return str(g[0])
        return "[" + ",".join(str(a) for a in g) + "]"


@dataclass(frozen=True)
class TrivialGroupModel(GroupModel):
    def identity(self) -> tuple:
        return ()

    def multiply(self, g, h) -> tuple:
        return ()

    def invert(self, g) -> tuple:
        return ()

    def canonical_key(self, g) -> str:
        return "e"


@dataclass(frozen=True)
class MatrixGroupModel(GroupModel):
    """Invertible dim x dim matrices over the exact scalars."""

    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("need dim >= 1")

    def identity(self) -> Matrix:
        return Matrix.identity(self.dim)

    def multiply(self, g: Matrix, h: Matrix) -> Matrix:
        return g * h

    def invert(self, g: Matrix) -> Matrix:
        return g.inverse()

    def canonical_key(self, g: Matrix) -> str:
        return g.text()


def make_group(kind: str, param: int | None = None) -> GroupModel:
    if kind == "symmetric":
        return SymmetricGroupModel(int(param))
    if kind == "free_abelian":
        return FreeAbelianGroupModel(int(param))
    if kind == "matrix":
        return MatrixGroupModel(int(param))
    if kind == "trivial":
        return TrivialGroupModel()
    raise ValueError(f"unknown group kind {kind!r}")


# --- formal group algebra -------------------------------------------------------


class FormalElement:
    """Sparse K-linear combination of group elements, keyed canonically.

    Zero coefficients are purged eagerly, so equality, support size and the
    identity test are all O(support).
    """

    __slots__ = ("model", "coeffs", "reg")

    def __init__(self, model: GroupModel, terms: Iterable[tuple[object, ScalarValue | int]] = ()):
        coeffs: dict[str, ScalarValue] = {}
        reg: dict[str, object] = {}
        for g, c in terms:
            key = model.canonical_key(g)
            acc = scalar_add(coeffs.get(key, 0), c)
            if is_zero(acc):
                coeffs.pop(key, None)
                reg.pop(key, None)
            else:
                coeffs[key] = acc
                reg[key] = g
        self.model = model
        self.coeffs = coeffs
        self.reg = reg

    @staticmethod
    def zero(model: GroupModel) -> "FormalElement":
        return FormalElement(model)

    @staticmethod
    def one(model: GroupModel) -> "FormalElement":
        return FormalElement(model, [(model.identity(), 1)])

    def terms(self) -> list[tuple[object, ScalarValue]]:
        return [(self.reg[key], self.coeffs[key]) for key in sorted(self.coeffs)]

    def support_size(self) -> int:
        return len(self.coeffs)

    def _require_same(self, other: "FormalElement") -> None:
        if not isinstance(other, FormalElement) or self.model != other.model:
            raise ValueError("formal elements over different groups")

    def __add__(self, other: "FormalElement") -> "FormalElement":
        self._require_same(other)
        return FormalElement(self.model, list(self.terms()) + list(other.terms()))

    def __mul__(self, other: "FormalElement") -> "FormalElement":
        self._require_same(other)
        out: list[tuple[object, ScalarValue]] = []
        for g, a in self.terms():
            for h, b in other.terms():
                out.append((self.model.multiply(g, h), scalar_mul(a, b)))
        return FormalElement(self.model, out)

    def scale(self, s: ScalarValue | int) -> "FormalElement":
        return FormalElement(self.model, [(g, scalar_mul(s, c)) for g, c in self.terms()])

    def power(self, e: int) -> "FormalElement":
        if e < 0:
            raise ValueError("negative powers are not defined for formal elements")
        acc = FormalElement.one(self.model)
        for _ in range(e):
            acc = acc * self
        return acc

    def is_identity(self) -> bool:
        if len(self.coeffs) != 1:
            return False
        key = self.model.canonical_key(self.model.identity())
        return key in self.coeffs and self.coeffs[key] == 1

    def canonical_key(self) -> str:
        return ";".join(f"{format_scalar(self.coeffs[k])}*{k}" for k in sorted(self.coeffs))

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{format_scalar(self.coeffs[k])} * {k}" for k in sorted(self.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self.model == other.model and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.model, tuple(sorted((k, v) for k, v in self.coeffs.items()))))

    def __repr__(self) -> str:
        return f"FormalElement({self.text()})"


def embed(model: GroupModel, g) -> FormalElement:
    """The group element as an algebra element, 1*[g]."""
    return FormalElement(model, [(g, 1)])


# --- twisted cyclic algebra ------------------------------------------------------


@dataclass(frozen=True)
class CyclicElement:
    """Element of the twisted cyclic algebra K[X]/(X^order - twist)."""

    order: int
    twist: ScalarValue
    coords: tuple[ScalarValue, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("need order >= 1")
        if not is_unit(self.twist):
            raise ValueError("twist must be a unit")
        if len(self.coords) != self.order:
            raise ValueError(f"need {self.order} coordinates, got {len(self.coords)}")

    @staticmethod
    def zero(order: int, twist: ScalarValue | int) -> "CyclicElement":
        return CyclicElement(order, as_scalar(twist), (Fraction(0),) * order)

    @staticmethod
    def one(order: int, twist: ScalarValue | int) -> "CyclicElement":
        return CyclicElement.x_power(order, twist, 0)

    @staticmethod
    def x_power(order: int, twist: ScalarValue | int, k: int) -> "CyclicElement":
        """X^k for any integer k, reduced via X^order = twist."""
        twist = as_scalar(twist)
        j = k % order
        m = (k - j) // order
        coords = [as_scalar(0)] * order
        coords[j] = scalar_pow(twist, m)
        return CyclicElement(order, twist, tuple(coords))

    def _require_same(self, other: "CyclicElement") -> None:
        if not isinstance(other, CyclicElement) or (self.order, self.twist) != (other.order, other.twist):
            raise ValueError("cyclic elements from different algebras")

    def __add__(self, other: "CyclicElement") -> "CyclicElement":
        self._require_same(other)
        return CyclicElement(
            self.order, self.twist,
            tuple(scalar_add(a, b) for a, b in zip(self.coords, other.coords)),
        )

    def __mul__(self, other: "CyclicElement") -> "CyclicElement":
        self._require_same(other)
        out = [as_scalar(0)] * self.order
        for i, a in enumerate(self.coords):
            if is_zero(a):
                continue
            for j, b in enumerate(other.coords):
                if is_zero(b):
                    continue
                c = scalar_mul(a, b)
                e = i + j
                if e >= self.order:  # single reduction suffices: i + j < 2*order
                    e -= self.order
                    c = scalar_mul(c, self.twist)
                out[e] = scalar_add(out[e], c)
        return CyclicElement(self.order, self.twist, tuple(out))

    def scale(self, s: ScalarValue | int) -> "CyclicElement":
        return CyclicElement(self.order, self.twist, tuple(scalar_mul(s, a) for a in self.coords))

    def power(self, e: int) -> "CyclicElement":
        if e < 0:
            raise ValueError("negative powers are not defined for general cyclic elements")
        acc = CyclicElement.one(self.order, self.twist)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def is_identity(self) -> bool:
        return self.coords[0] == 1 and all(is_zero(a) for a in self.coords[1:])

    def canonical_key(self) -> str:
        return "[" + ",".join(format_scalar(a) for a in self.coords) + "]"

    def text(self) -> str:
        return " + ".join(f"{format_scalar(a)}*X^{i}" for i, a in enumerate(self.coords))

    def __repr__(self) -> str:
        return f"CyclicElement(order={self.order}, twist={format_scalar(self.twist)}, {self.canonical_key()})"


# --- backend-generic operations ---------------------------------------------------

AlgebraElement = FormalElement | Matrix | CyclicElement


def _require_compatible(x: AlgebraElement, y: AlgebraElement) -> None:
    if type(x) is not type(y):
        raise ValueError(f"backend mismatch: {type(x).__name__} vs {type(y).__name__}")


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _require_compatible(x, y)
    return x + y


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _require_compatible(x, y)
    return x * y


def alg_scale(x: AlgebraElement, s: ScalarValue | int) -> AlgebraElement:
    return x.scale(s)


def alg_pow(x: AlgebraElement, e: int) -> AlgebraElement:
    return x.power(e)


def is_identity(x: AlgebraElement) -> bool:
    return x.is_identity()


def element_key(x: AlgebraElement) -> str:
    """Canonical serialization, usable as an exact-equality dedup key."""
    if isinstance(x, Matrix):
        return x.text()
    return x.canonical_key()


def element_text(x: AlgebraElement) -> str:
    return x.text()
