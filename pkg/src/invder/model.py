"""Finite-dimensional algebras over Q as structure constant tables.

A bilinear operation on an n-dimensional space is a sparse table
c[i][j][k]: the product of basis vectors i and j is the vector with
coordinate k equal to c_ij^k.  Linear maps follow the column convention:
column j of the matrix is the image of basis vector j.

The on-disk format is JSON:

    {
      "name": "heisenberg3",
      "dimension": 3,
      "basis": ["e1", "e2", "e3"],
      "operations": {
        "bracket": {"skew": true, "table": [{"i": 0, "j": 1, "v": [["1", 2]]}]}
      },
      "maps": {"delta_w": [["1", "3", "0"], ["-1", "1", "0"], ["0", "0", "2"]]}
    }

Each map is stored as a list of columns.  A table flagged "skew" may list
only pairs with i < j; the loader fills in the transposed pairs with negated
coefficients.  Coefficients are exact rational strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .linalg import Matrix, Vector
from .rational import ZERO, Q, format_rational, parse_rational

KINDS = ("lie", "prelie", "associative", "zinbiel", "dendriform")

Sparse = dict[int, Fraction]
ConstantTable = dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]


def _normalise_entry(dim: int, pairs) -> tuple[tuple[int, Fraction], ...]:
    acc: Sparse = {}
    if isinstance(pairs, dict):
        pairs = pairs.items()
    for k, coeff in pairs:
        if not 0 <= k < dim:
            raise InputError(f"basis index {k} out of range for dimension {dim}")
        c = Q(coeff)
        if c:
            acc[k] = acc.get(k, ZERO) + c
    return tuple(sorted((k, c) for k, c in acc.items() if c))


@dataclass(frozen=True)
class BilinearOp:
    """Sparse bilinear operation given by rational structure constants."""

    dim: int
    constants: tuple[tuple[tuple[int, int], tuple[tuple[int, Fraction], ...]], ...]

    @staticmethod
    def from_dict(dim: int, table: dict) -> "BilinearOp":
        if dim < 1:
            raise InputError("operation dimension must be at least 1")
        cleaned = {}
        for (i, j), pairs in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise InputError(f"pair ({i}, {j}) out of range for dimension {dim}")
            entry = _normalise_entry(dim, pairs)
            if entry:
                cleaned[(i, j)] = entry
        return BilinearOp(dim, tuple(sorted(cleaned.items())))

    @staticmethod
    def zero(dim: int) -> "BilinearOp":
        return BilinearOp.from_dict(dim, {})

    def table(self) -> ConstantTable:
        return dict(self.constants)

    def entry(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        return self._index().get((i, j), ())

    def _index(self) -> ConstantTable:
        cached = getattr(self, "_idx", None)
        if cached is None:
            cached = dict(self.constants)
            object.__setattr__(self, "_idx", cached)
        return cached

    def is_zero(self) -> bool:
        return not self.constants

    def basis_product(self, i: int, j: int) -> Sparse:
        return dict(self.entry(i, j))

    def eval(self, x: Vector, y: Vector) -> Vector:
        """Product of two vectors expressed in the algebra's basis."""
        if len(x) != self.dim or len(y) != self.dim:
            raise InputError("vector length does not match operation dimension")
        sx = {i: v for i, v in enumerate(x.entries) if v}
        sy = {j: v for j, v in enumerate(y.entries) if v}
        return sparse_to_vector(self.dim, self.mul_sparse(sx, sy))

    def mul_sparse(self, x: Sparse, y: Sparse) -> Sparse:
        idx = self._index()
        out: Sparse = {}
        for i, xi in x.items():
            for j, yj in y.items():
                pairs = idx.get((i, j))
                if pairs:
                    f = xi * yj
                    for k, c in pairs:
                        out[k] = out.get(k, ZERO) + f * c
        return {k: v for k, v in out.items() if v}

    def opposite(self) -> "BilinearOp":
        flipped = {(j, i): pairs for (i, j), pairs in self.constants}
        return BilinearOp.from_dict(self.dim, flipped)

    def __add__(self, other: "BilinearOp") -> "BilinearOp":
        self._check_dim(other)
        acc: dict[tuple[int, int], list] = {}
        for (i, j), pairs in self.constants + other.constants:
            acc.setdefault((i, j), []).extend(pairs)
        return BilinearOp.from_dict(self.dim, acc)

    def __sub__(self, other: "BilinearOp") -> "BilinearOp":
        return self + other.scale(-1)

    def scale(self, c) -> "BilinearOp":
        c = Q(c)
        scaled = {key: [(k, c * v) for k, v in pairs]
                  for key, pairs in self.constants}
        return BilinearOp.from_dict(self.dim, scaled)

    def twist(self, delta: "LinearMap") -> "BilinearOp":
        """Post-compose with delta: the new product of x and y is delta(x y)."""
        if delta.dim != self.dim:
            raise InputError("map dimension does not match operation dimension")
        out: dict[tuple[int, int], list] = {}
        for (i, j), pairs in self.constants:
            img: Sparse = {}
            for l, c in pairs:
                for k, m in delta.column_sparse(l).items():
                    img[k] = img.get(k, ZERO) + c * m
            out[(i, j)] = list(img.items())
        return BilinearOp.from_dict(self.dim, out)

    def compose_left(self, r: "LinearMap") -> "BilinearOp":
        """New product of x and y is (R x) y."""
        if r.dim != self.dim:
            raise InputError("map dimension does not match operation dimension")
        idx = self._index()
        out: dict[tuple[int, int], list] = {}
        for i in range(self.dim):
            ri = r.column_sparse(i)
            for j in range(self.dim):
                img: Sparse = {}
                for l, c in ri.items():
                    for k, v in idx.get((l, j), ()):
                        img[k] = img.get(k, ZERO) + c * v
                if img:
                    out[(i, j)] = list(img.items())
        return BilinearOp.from_dict(self.dim, out)

    def compose_right(self, r: "LinearMap") -> "BilinearOp":
        """New product of x and y is x (R y)."""
        if r.dim != self.dim:
            raise InputError("map dimension does not match operation dimension")
        idx = self._index()
        out: dict[tuple[int, int], list] = {}
        for j in range(self.dim):
            rj = r.column_sparse(j)
            for i in range(self.dim):
                img: Sparse = {}
                for l, c in rj.items():
                    for k, v in idx.get((i, l), ()):
                        img[k] = img.get(k, ZERO) + c * v
                if img:
                    out[(i, j)] = list(img.items())
        return BilinearOp.from_dict(self.dim, out)

    def _check_dim(self, other: "BilinearOp") -> None:
        if self.dim != other.dim:
            raise InputError("operation dimension mismatch")


@dataclass(frozen=True)
class LinearMap:
    """Square matrix acting on the algebra, column j = image of basis j."""

    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise InputError("linear maps on an algebra must be square")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @staticmethod
    def from_columns(cols) -> "LinearMap":
        return LinearMap(Matrix.from_columns(cols))

    @staticmethod
    def from_rows(rows) -> "LinearMap":
        return LinearMap(Matrix.from_rows(rows))

    @staticmethod
    def identity(n: int) -> "LinearMap":
        return LinearMap(Matrix.identity(n))

    @staticmethod
    def zero(n: int) -> "LinearMap":
        return LinearMap(Matrix.zeros(n, n))

    @staticmethod
    def diagonal(values) -> "LinearMap":
        values = [Q(v) for v in values]
        n = len(values)
        return LinearMap(Matrix(n, n, tuple(values[i] if i == j else ZERO
                                            for i in range(n) for j in range(n))))

    def apply(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def apply_sparse(self, x: Sparse) -> Sparse:
        out: Sparse = {}
        for j, xj in x.items():
            for i, m in self.column_sparse(j).items():
                out[i] = out.get(i, ZERO) + xj * m
        return {k: v for k, v in out.items() if v}

    def column_sparse(self, j: int) -> Sparse:
        cols = getattr(self, "_cols", None)
        if cols is None:
            cols = tuple(
                {i: self.matrix.entry(i, j) for i in range(self.dim)
                 if self.matrix.entry(i, j)}
                for j in range(self.dim))
            object.__setattr__(self, "_cols", cols)
        return cols[j]

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(self.matrix.matmul(other.matrix))

    def square(self) -> "LinearMap":
        return self.compose(self)

    def inverse(self) -> "LinearMap":
        return LinearMap(self.matrix.invert())

    def is_invertible(self) -> bool:
        return self.matrix.det() != 0

    def det(self) -> Fraction:
        return self.matrix.det()

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix - other.matrix)

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.matrix.scale(c))

    def commutes_with(self, other: "LinearMap") -> bool:
        return self.compose(other) == other.compose(self)

    def to_columns(self) -> list[list[str]]:
        return [[format_rational(self.matrix.entry(i, j)) for i in range(self.dim)]
                for j in range(self.dim)]

    @staticmethod
    def from_column_strings(cols, dim: int) -> "LinearMap":
        if len(cols) != dim or any(len(c) != dim for c in cols):
            raise InputError("map must be a square array of columns")
        return LinearMap.from_columns([[parse_rational(v) for v in col]
                                       for col in cols])


def sparse_to_vector(dim: int, s: Sparse) -> Vector:
    return Vector(tuple(s.get(i, ZERO) for i in range(dim)))


def vector_to_sparse(v: Vector) -> Sparse:
    return {i: c for i, c in enumerate(v.entries) if c}


@dataclass(frozen=True)
class Algebra:
    """Named algebra: basis labels plus one or more operations."""

    name: str
    dim: int
    basis_names: tuple[str, ...]
    ops: tuple[tuple[str, BilinearOp], ...]
    kind_hint: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise InputError("algebra dimension must be at least 1")
        if len(self.basis_names) != self.dim:
            raise InputError("basis label count does not match dimension")
        if not self.ops:
            raise InputError("algebra needs at least one operation")
        for name, op in self.ops:
            if op.dim != self.dim:
                raise InputError(f"operation {name!r} has wrong dimension")
        if self.kind_hint is not None and self.kind_hint not in KINDS:
            raise InputError(f"unknown kind hint {self.kind_hint!r}")
        if self.kind_hint == "dendriform":
            if set(self.op_names()) != {"left", "right"}:
                raise InputError('dendriform algebras need ops "left" and "right"')
        elif self.kind_hint is not None and len(self.ops) != 1:
            raise InputError(f"kind {self.kind_hint!r} expects a single operation")

    @staticmethod
    def build(name: str, basis_names, ops: dict[str, BilinearOp],
              kind_hint: str | None = None) -> "Algebra":
        basis = tuple(basis_names)
        return Algebra(name, len(basis), basis, tuple(sorted(ops.items())), kind_hint)

    def op_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.ops)

    def op(self, name: str | None = None) -> BilinearOp:
        if name is None:
            if len(self.ops) != 1:
                raise InputError("operation name required: algebra has "
                                 + ", ".join(self.op_names()))
            return self.ops[0][1]
        for op_name, op in self.ops:
            if op_name == name:
                return op
        raise InputError(f"no operation named {name!r} in algebra {self.name!r}")

    def with_ops(self, name: str, ops: dict[str, BilinearOp],
                 kind_hint: str | None = None) -> "Algebra":
        return Algebra.build(name, self.basis_names, ops, kind_hint)

    def unit_sparse(self, i: int) -> Sparse:
        if not 0 <= i < self.dim:
            raise InputError(f"basis index {i} out of range")
        return {i: Q(1)}


@dataclass(frozen=True)
class AlgebraDocument:
    """An algebra together with the named linear maps stored beside it."""

    algebra: Algebra
    maps: tuple[tuple[str, LinearMap], ...] = field(default_factory=tuple)

    @staticmethod
    def build(algebra: Algebra, maps: dict[str, LinearMap] | None = None
              ) -> "AlgebraDocument":
        return AlgebraDocument(algebra, tuple(sorted((maps or {}).items())))

    def map(self, name: str) -> LinearMap:
        for map_name, m in self.maps:
            if map_name == name:
                return m
        raise InputError(f"no map named {name!r} in algebra {self.algebra.name!r}")

    def map_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.maps)


def _parse_table(dim: int, spec: dict) -> BilinearOp:
    if not isinstance(spec, dict) or "table" not in spec:
        raise InputError('operation spec must be an object with a "table" list')
    skew = bool(spec.get("skew", False))
    table: dict[tuple[int, int], list] = {}
    for row in spec["table"]:
        try:
            i, j = int(row["i"]), int(row["j"])
            pairs = [(int(k), parse_rational(coeff)) for coeff, k in row["v"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed table row: {row!r}") from exc
        if (i, j) in table:
            raise InputError(f"duplicate table entry for pair ({i}, {j})")
        if skew and i == j and any(c for _, c in pairs):
            raise InputError(f"skew table lists a nonzero diagonal pair ({i}, {i})")
        table[(i, j)] = pairs
    if skew:
        for (i, j), pairs in list(table.items()):
            if (j, i) not in table:
                table[(j, i)] = [(k, -c) for k, c in pairs]
    return BilinearOp.from_dict(dim, table)


def algebra_from_dict(data: dict) -> AlgebraDocument:
    """Parse the JSON object form of an algebra file."""
    if not isinstance(data, dict):
        raise InputError("algebra file must be a JSON object")
    try:
        name = data["name"]
        dim = int(data["dimension"])
        basis = list(data["basis"])
        op_specs = data["operations"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("algebra file needs name, dimension, basis, operations") from exc
    if dim < 1:
        raise InputError("algebra dimension must be at least 1")
    if len(basis) != dim:
        raise InputError("basis list length does not match dimension")
    if not isinstance(op_specs, dict) or not op_specs:
        raise InputError("operations must be a non-empty object")
    ops = {op_name: _parse_table(dim, spec) for op_name, spec in op_specs.items()}
    kind = data.get("kind")
    algebra = Algebra.build(str(name), [str(b) for b in basis], ops, kind)
    maps = {}
    for map_name, cols in data.get("maps", {}).items():
        maps[str(map_name)] = LinearMap.from_column_strings(cols, dim)
    return AlgebraDocument.build(algebra, maps)


def algebra_to_dict(doc: AlgebraDocument) -> dict:
    """Serialise back to the JSON object form, full tables, no skew flag."""
    alg = doc.algebra
    operations = {}
    for op_name, op in alg.ops:
        rows = [{"i": i, "j": j,
                 "v": [[format_rational(c), k] for k, c in pairs]}
                for (i, j), pairs in op.constants]
        operations[op_name] = {"table": rows}
    data: dict = {
        "name": alg.name,
        "dimension": alg.dim,
        "basis": list(alg.basis_names),
        "operations": operations,
    }
    if alg.kind_hint is not None:
        data["kind"] = alg.kind_hint
    if doc.maps:
        data["maps"] = {name: m.to_columns() for name, m in doc.maps}
    return data


def load_algebra(path: str) -> AlgebraDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return algebra_from_dict(data)


def save_algebra(doc: AlgebraDocument, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra_to_dict(doc), fh, indent=2)
        fh.write("\n")
