"""Derivation spaces and invertible derivations.

A linear map delta is a derivation of an operation when
delta(x y) = (delta x) y + x (delta y) on all basis pairs.  Collecting that
rule over every pair and every operation gives a homogeneous linear system
in the n^2 matrix entries of delta; its kernel is the derivation space,
returned with the canonical basis produced by the exact solver.

An InvDer map is an invertible derivation whose inverse is again a
derivation.  For any invertible derivation this is equivalent to the square
condition mu(delta x, delta y) = delta^2 mu(x, y); is_invder computes both
routes independently and refuses to return if they ever disagree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .axioms import CheckReport, Witness, leibniz_witness, _add
from .errors import InputError, InvderError, NotInvDerError
from .linalg import Matrix, Vector, solve
from .model import Algebra, BilinearOp, LinearMap
from .poly import Poly, det_poly
from .rational import Q, ZERO

VANISHING_DET = "generic determinant vanishes"


def _selected_ops(alg: Algebra, op_names) -> list[tuple[str, BilinearOp]]:
    if op_names is None:
        return list(alg.ops)
    return [(name, alg.op(name)) for name in op_names]


def is_derivation(delta: LinearMap, alg: Algebra,
                  op_names=None) -> CheckReport:
    """Leibniz rule for delta on every selected operation."""
    if delta.dim != alg.dim:
        raise InputError("map dimension does not match algebra dimension")
    for _, op in _selected_ops(alg, op_names):
        w = leibniz_witness(op, delta)
        if w is not None:
            return CheckReport("derivation", False, w)
    return CheckReport("derivation", True)


def check_squared_leibniz(alg: Algebra, op_name: str | None,
                          delta: LinearMap) -> CheckReport:
    """Second order Leibniz expansion for a derivation delta.

    delta^2 (x y) = (delta^2 x) y + x (delta^2 y) + 2 (delta x)(delta y);
    the cross term is what keeps delta^2 from being a derivation itself.
    """
    op = alg.op(op_name)
    d2 = delta.square()
    for i in range(alg.dim):
        for j in range(alg.dim):
            x, y = alg.unit_sparse(i), alg.unit_sparse(j)
            lhs = d2.apply_sparse(op.mul_sparse(x, y))
            cross = op.mul_sparse(delta.apply_sparse(x), delta.apply_sparse(y))
            rhs = _add(op.mul_sparse(d2.apply_sparse(x), y),
                       op.mul_sparse(x, d2.apply_sparse(y)),
                       {k: 2 * v for k, v in cross.items()})
            if lhs != rhs:
                from .model import sparse_to_vector
                return CheckReport("squared_leibniz", False,
                                   Witness((i, j),
                                           sparse_to_vector(alg.dim, lhs),
                                           sparse_to_vector(alg.dim, rhs)))
    return CheckReport("squared_leibniz", True)


@dataclass(frozen=True)
class DerivationSpace:
    """Kernel of the Leibniz system, as column-convention matrices."""

    algebra: Algebra
    op_names: tuple[str, ...]
    basis: tuple[LinearMap, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combination(self, coeffs) -> LinearMap:
        coeffs = [Q(c) for c in coeffs]
        if len(coeffs) != self.dim:
            raise InputError("coefficient count does not match space dimension")
        n = self.algebra.dim
        total = Matrix.zeros(n, n)
        for c, b in zip(coeffs, self.basis):
            if c:
                total = total + b.matrix.scale(c)
        return LinearMap(total)

    def coordinates_of(self, candidate: LinearMap) -> Vector | None:
        """Coordinates of a map in this basis, or None when outside the span."""
        n = self.algebra.dim
        if candidate.dim != n:
            raise InputError("map dimension does not match algebra dimension")
        if self.dim == 0:
            return Vector(()) if candidate.matrix.is_zero() else None
        cols = [b.matrix.entries for b in self.basis]
        system = Matrix(n * n, self.dim,
                        tuple(cols[t][e] for e in range(n * n)
                              for t in range(self.dim)))
        sol = solve(system, Vector(candidate.matrix.entries))
        return sol.particular if sol is not None else None

    def contains(self, candidate: LinearMap) -> bool:
        return self.coordinates_of(candidate) is not None

    def to_dict(self) -> dict:
        return {"dim": self.dim,
                "ops": list(self.op_names),
                "basis": [b.to_columns() for b in self.basis]}


def derivation_space(alg: Algebra, op_names=None) -> DerivationSpace:
    """Solve the Leibniz system exactly for all selected operations."""
    n = alg.dim
    selected = _selected_ops(alg, op_names)
    lookups = []
    for _, op in selected:
        lookups.append({key: dict(pairs) for key, pairs in op.constants})

    rows: list[list] = []
    for table in lookups:
        for i in range(n):
            for j in range(n):
                prod_ij = table.get((i, j), {})
                for k in range(n):
                    row = [ZERO] * (n * n)
                    for l, c in prod_ij.items():
                        row[k * n + l] += c
                    for m in range(n):
                        c = table.get((m, j), {}).get(k)
                        if c:
                            row[m * n + i] -= c
                        c = table.get((i, m), {}).get(k)
                        if c:
                            row[m * n + j] -= c
                    if any(row):
                        rows.append(row)

    if not rows:
        # every map is a derivation (all products vanish)
        basis = tuple(LinearMap(Matrix(n, n, tuple(
            Q(1) if e == idx else ZERO for e in range(n * n))))
            for idx in range(n * n))
    else:
        kernel = Matrix.from_rows(rows).kernel_basis()
        basis = tuple(LinearMap(Matrix(n, n, v.entries)) for v in kernel)
    return DerivationSpace(alg, tuple(name for name, _ in selected), basis)


@dataclass(frozen=True)
class InvDerVerdict:
    """Flags for one candidate map; accepted means all three hold."""

    is_derivation: bool
    is_invertible: bool
    inverse_is_derivation: bool
    square_condition: bool

    @property
    def accepted(self) -> bool:
        return (self.is_derivation and self.is_invertible
                and self.inverse_is_derivation)

    def to_dict(self) -> dict:
        return {
            "is_derivation": self.is_derivation,
            "is_invertible": self.is_invertible,
            "inverse_is_derivation": self.inverse_is_derivation,
            "square_condition": self.square_condition,
            "accepted": self.accepted,
        }


def _square_condition(delta: LinearMap, ops) -> bool:
    d2 = delta.square()
    for _, op in ops:
        for i in range(op.dim):
            for j in range(op.dim):
                x, y = {i: Q(1)}, {j: Q(1)}
                lhs = op.mul_sparse(delta.apply_sparse(x), delta.apply_sparse(y))
                rhs = d2.apply_sparse(op.mul_sparse(x, y))
                if lhs != rhs:
                    return False
    return True


def is_invder(delta: LinearMap, alg: Algebra, op_names=None) -> InvDerVerdict:
    """Full verdict for one map, with the two equivalent routes cross-checked."""
    if delta.dim != alg.dim:
        raise InputError("map dimension does not match algebra dimension")
    ops = _selected_ops(alg, op_names)
    deriv = all(leibniz_witness(op, delta) is None for _, op in ops)
    invertible = delta.is_invertible()
    square = _square_condition(delta, ops)
    inverse_deriv = False
    if invertible:
        inv = delta.inverse()
        inverse_deriv = all(leibniz_witness(op, inv) is None for _, op in ops)
    if deriv and invertible and inverse_deriv != square:
        # the two characterisations are provably equivalent for invertible
        # derivations; disagreement means a defect in this package
        raise InvderError(
            "internal inconsistency: inverse-derivation and square-condition "
            "routes disagree for an invertible derivation")
    return InvDerVerdict(deriv, invertible, inverse_deriv, square)


@dataclass(frozen=True)
class InvDerAlgebra:
    """An algebra packaged with an accepted InvDer map and its inverse."""

    algebra: Algebra
    delta: LinearMap
    delta_inv: LinearMap

    @staticmethod
    def create(alg: Algebra, delta: LinearMap) -> "InvDerAlgebra":
        verdict = is_invder(delta, alg)
        if not verdict.accepted:
            raise NotInvDerError(
                f"map is not InvDer for {alg.name!r}: {verdict.to_dict()}")
        return InvDerAlgebra(alg, delta, delta.inverse())


@dataclass(frozen=True)
class InvDerSearchResult:
    """Outcome of a bounded search over the derivation space."""

    found: LinearMap | None
    certificate: str | None
    samples_tried: int
    space_dim: int

    def to_dict(self) -> dict:
        data: dict = {
            "found": self.found.to_columns() if self.found else None,
            "samples_tried": self.samples_tried,
            "derivation_space_dim": self.space_dim,
        }
        if self.certificate is not None:
            data["certificate"] = self.certificate
        return data


def generic_determinant(space: DerivationSpace) -> Poly:
    """Determinant of a generic element of the space, as an exact polynomial."""
    n = space.algebra.dim
    m = space.dim
    entries = []
    for r in range(n):
        row = []
        for c in range(n):
            p = Poly.const(m, 0)
            for t, b in enumerate(space.basis):
                coeff = b.matrix.entry(r, c)
                if coeff:
                    p = p + Poly.variable(m, t, coeff)
            row.append(p)
        entries.append(row)
    return det_poly(entries)


def invder_search(alg: Algebra, op_names=None, *, coefficient_range: int = 3,
                  max_samples: int = 400, seed: int = 0) -> InvDerSearchResult:
    """Look for an accepted InvDer map inside the derivation space.

    Candidates are rational combinations of the derivation basis with integer
    coefficients drawn uniformly from [-coefficient_range, coefficient_range]
    under the given seed, filtered by invertibility and then by the square
    condition.  When the determinant of a generic space element is the zero
    polynomial no invertible derivation exists at all; that is detected
    exactly up front and returned as a certificate instead of sampling.
    """
    if coefficient_range < 1:
        raise InputError("coefficient range must be at least 1")
    if max_samples < 1:
        raise InputError("sample budget must be at least 1")
    space = derivation_space(alg, op_names)
    if space.dim == 0 or generic_determinant(space).is_zero():
        return InvDerSearchResult(None, VANISHING_DET, 0, space.dim)
    rng = random.Random(seed)
    ops = _selected_ops(alg, op_names)
    tried = 0
    for _ in range(max_samples):
        coeffs = [Q(rng.randint(-coefficient_range, coefficient_range))
                  for _ in range(space.dim)]
        if not any(coeffs):
            continue
        tried += 1
        candidate = space.combination(coeffs)
        if not candidate.is_invertible():
            continue
        if not _square_condition(candidate, ops):
            continue
        verdict = is_invder(candidate, alg, op_names)
        if verdict.accepted:
            return InvDerSearchResult(candidate, None, tried, space.dim)
    return InvDerSearchResult(None, None, tried, space.dim)
