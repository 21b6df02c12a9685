"""Structure axiom checkers.

Every identity handled here is multilinear, so it holds for all vectors iff
it holds on all basis tuples.  Checkers walk basis tuples in lexicographic
order and report the first violation as a witness carrying the offending
indices and both evaluated sides.  Verdicts are computed from the tables
themselves; a kind hint on the algebra is never trusted.

Axiom identifiers form a closed set (AXIOM_IDS).  The ones prefixed with
"invder" and the two "zinbiel_aux" identities take a linear map delta in
addition to the operation; "identity_25" requires delta to be a derivation
of the operation and refuses to run otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .linalg import Vector
from .model import Algebra, BilinearOp, LinearMap, Sparse, sparse_to_vector
from .rational import Q, ZERO

AXIOM_IDS = (
    "skew_symmetry", "jacobi", "associativity", "pre_lie", "zinbiel",
    "dendriform_1", "dendriform_2", "dendriform_3", "commutativity",
    "invder_jacobi", "invder_prelie", "invder_assoc", "invder_zinbiel",
    "zinbiel_aux_44", "zinbiel_aux_45",
    "invder_dend_47", "invder_dend_48", "invder_dend_49",
    "identity_25",
)

DELTA_AXIOMS = frozenset(a for a in AXIOM_IDS
                         if a.startswith(("invder", "zinbiel_aux", "identity")))


@dataclass(frozen=True)
class Witness:
    """First basis tuple where an identity breaks, with both sides."""

    indices: tuple[int, ...]
    lhs: Vector
    rhs: Vector

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "lhs": [str(c) for c in self.lhs.entries],
            "rhs": [str(c) for c in self.rhs.entries],
        }


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one axiom check; witness present iff the check failed."""

    axiom: str
    holds: bool
    witness: Witness | None = None

    def to_dict(self) -> dict:
        data: dict = {"axiom": self.axiom, "holds": self.holds}
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


def _add(*sparses: Sparse) -> Sparse:
    out: Sparse = {}
    for s in sparses:
        for k, v in s.items():
            out[k] = out.get(k, ZERO) + v
    return {k: v for k, v in out.items() if v}


def _neg(s: Sparse) -> Sparse:
    return {k: -v for k, v in s.items()}


def _report(axiom: str, dim: int, scan) -> CheckReport:
    """Run a scan yielding (indices, lhs, rhs) triples; stop at the first gap."""
    for indices, lhs, rhs in scan:
        if lhs != rhs:
            return CheckReport(axiom, False,
                              Witness(indices,
                                      sparse_to_vector(dim, lhs),
                                      sparse_to_vector(dim, rhs)))
    return CheckReport(axiom, True)


def _pairs(n: int):
    return ((i, j) for i in range(n) for j in range(n))


def _triples(n: int):
    return ((i, j, k) for i in range(n) for j in range(n) for k in range(n))


def check_skew_symmetry(alg: Algebra, op_name: str | None = None) -> CheckReport:
    op = alg.op(op_name)
    scan = (((i, j), op.basis_product(i, j), _neg(op.basis_product(j, i)))
            for i, j in _pairs(alg.dim))
    return _report("skew_symmetry", alg.dim, scan)


def check_commutativity(alg: Algebra, op_name: str | None = None) -> CheckReport:
    op = alg.op(op_name)
    scan = (((i, j), op.basis_product(i, j), op.basis_product(j, i))
            for i, j in _pairs(alg.dim))
    return _report("commutativity", alg.dim, scan)


def check_jacobi(alg: Algebra, op_name: str | None = None) -> CheckReport:
    """Cyclic Jacobi sum vanishes.

    For a skew table the sum is alternating, so triples i < j < k suffice;
    for a non-skew table every triple is checked.
    """
    op = alg.op(op_name)
    n = alg.dim
    skew = check_skew_symmetry(alg, op_name).holds

    def jac(i, j, k):
        x, y, z = alg.unit_sparse(i), alg.unit_sparse(j), alg.unit_sparse(k)
        total = _add(op.mul_sparse(x, op.mul_sparse(y, z)),
                     op.mul_sparse(y, op.mul_sparse(z, x)),
                     op.mul_sparse(z, op.mul_sparse(x, y)))
        return (i, j, k), total, {}

    if skew:
        triples = ((i, j, k) for i in range(n)
                   for j in range(i + 1, n) for k in range(j + 1, n))
    else:
        triples = _triples(n)
    return _report("jacobi", n, (jac(i, j, k) for i, j, k in triples))


def _triple_scan(alg: Algebra, compute):
    for i, j, k in _triples(alg.dim):
        x, y, z = alg.unit_sparse(i), alg.unit_sparse(j), alg.unit_sparse(k)
        lhs, rhs = compute(x, y, z)
        yield (i, j, k), lhs, rhs


def check_associativity(alg: Algebra, op_name: str | None = None) -> CheckReport:
    op = alg.op(op_name)

    def compute(x, y, z):
        return op.mul_sparse(op.mul_sparse(x, y), z), \
               op.mul_sparse(x, op.mul_sparse(y, z))

    return _report("associativity", alg.dim, _triple_scan(alg, compute))


def check_pre_lie(alg: Algebra, op_name: str | None = None) -> CheckReport:
    """Left associator symmetric in its first two arguments."""
    op = alg.op(op_name)

    def assoc(x, y, z):
        return _add(op.mul_sparse(x, op.mul_sparse(y, z)),
                    _neg(op.mul_sparse(op.mul_sparse(x, y), z)))

    def compute(x, y, z):
        return assoc(x, y, z), assoc(y, x, z)

    return _report("pre_lie", alg.dim, _triple_scan(alg, compute))


def check_zinbiel(alg: Algebra, op_name: str | None = None) -> CheckReport:
    op = alg.op(op_name)

    def compute(x, y, z):
        lhs = op.mul_sparse(x, op.mul_sparse(y, z))
        rhs = _add(op.mul_sparse(op.mul_sparse(x, y), z),
                   op.mul_sparse(op.mul_sparse(y, x), z))
        return lhs, rhs

    return _report("zinbiel", alg.dim, _triple_scan(alg, compute))


def _dendriform_ops(alg: Algebra) -> tuple[BilinearOp, BilinearOp]:
    names = set(alg.op_names())
    if not {"left", "right"} <= names:
        raise InputError('dendriform checks need ops named "left" and "right"')
    return alg.op("left"), alg.op("right")


def check_dendriform(alg: Algebra) -> tuple[CheckReport, CheckReport, CheckReport]:
    """The three dendriform axioms, in order."""
    left, right = _dendriform_ops(alg)

    def ax1(x, y, z):
        return left.mul_sparse(left.mul_sparse(x, y), z), \
               left.mul_sparse(x, _add(left.mul_sparse(y, z),
                                       right.mul_sparse(y, z)))

    def ax2(x, y, z):
        return left.mul_sparse(right.mul_sparse(x, y), z), \
               right.mul_sparse(x, left.mul_sparse(y, z))

    def ax3(x, y, z):
        return right.mul_sparse(x, right.mul_sparse(y, z)), \
               right.mul_sparse(_add(left.mul_sparse(x, y),
                                     right.mul_sparse(x, y)), z)

    return (_report("dendriform_1", alg.dim, _triple_scan(alg, ax1)),
            _report("dendriform_2", alg.dim, _triple_scan(alg, ax2)),
            _report("dendriform_3", alg.dim, _triple_scan(alg, ax3)))


def _check_delta(alg: Algebra, delta: LinearMap) -> None:
    if delta.dim != alg.dim:
        raise InputError("map dimension does not match algebra dimension")


def check_invder_jacobi(alg: Algebra, op_name: str | None,
                        delta: LinearMap) -> CheckReport:
    """Cyclic sum of [delta x, [y, z]] vanishes."""
    _check_delta(alg, delta)
    op = alg.op(op_name)

    def compute_triple(i, j, k):
        x, y, z = alg.unit_sparse(i), alg.unit_sparse(j), alg.unit_sparse(k)
        total = _add(
            op.mul_sparse(delta.apply_sparse(x), op.mul_sparse(y, z)),
            op.mul_sparse(delta.apply_sparse(y), op.mul_sparse(z, x)),
            op.mul_sparse(delta.apply_sparse(z), op.mul_sparse(x, y)))
        return (i, j, k), total, {}

    return _report("invder_jacobi", alg.dim,
                   (compute_triple(i, j, k) for i, j, k in _triples(alg.dim)))


def leibniz_witness(op: BilinearOp, delta: LinearMap) -> Witness | None:
    """First basis pair where delta fails the Leibniz rule, if any."""
    one = Q(1)
    for i in range(op.dim):
        for j in range(op.dim):
            x, y = {i: one}, {j: one}
            lhs = delta.apply_sparse(op.mul_sparse(x, y))
            rhs = _add(op.mul_sparse(delta.apply_sparse(x), y),
                       op.mul_sparse(x, delta.apply_sparse(y)))
            if lhs != rhs:
                return Witness((i, j), sparse_to_vector(op.dim, lhs),
                               sparse_to_vector(op.dim, rhs))
    return None


def check_identity_25(alg: Algebra, op_name: str | None,
                      delta: LinearMap) -> CheckReport:
    """Cyclic sum of [x, delta[y, z]] equals cyclic sum of [delta x, [y, z]].

    Requires delta to be a derivation of the operation; this compatibility
    statement is meaningless otherwise, so non-derivations are rejected.
    """
    _check_delta(alg, delta)
    op = alg.op(op_name)
    if leibniz_witness(op, delta) is not None:
        raise InputError("identity_25 requires delta to be a derivation")

    def compute(x, y, z):
        lhs = _add(op.mul_sparse(x, delta.apply_sparse(op.mul_sparse(y, z))),
                   op.mul_sparse(y, delta.apply_sparse(op.mul_sparse(z, x))),
                   op.mul_sparse(z, delta.apply_sparse(op.mul_sparse(x, y))))
        rhs = _add(op.mul_sparse(delta.apply_sparse(x), op.mul_sparse(y, z)),
                   op.mul_sparse(delta.apply_sparse(y), op.mul_sparse(z, x)),
                   op.mul_sparse(delta.apply_sparse(z), op.mul_sparse(x, y)))
        return lhs, rhs

    return _report("identity_25", alg.dim, _triple_scan(alg, compute))


def check_invder_prelie(alg: Algebra, op_name: str | None,
                        delta: LinearMap) -> CheckReport:
    """delta x * (y * z) - (x * y) * delta z, symmetric under swapping x, y."""
    _check_delta(alg, delta)
    op = alg.op(op_name)

    def side(x, y, z):
        return _add(op.mul_sparse(delta.apply_sparse(x), op.mul_sparse(y, z)),
                    _neg(op.mul_sparse(op.mul_sparse(x, y),
                                       delta.apply_sparse(z))))

    def compute(x, y, z):
        return side(x, y, z), side(y, x, z)

    return _report("invder_prelie", alg.dim, _triple_scan(alg, compute))


def check_invder_assoc(alg: Algebra, op_name: str | None,
                       delta: LinearMap) -> CheckReport:
    _check_delta(alg, delta)
    op = alg.op(op_name)

    def compute(x, y, z):
        return op.mul_sparse(delta.apply_sparse(x), op.mul_sparse(y, z)), \
               op.mul_sparse(op.mul_sparse(x, y), delta.apply_sparse(z))

    return _report("invder_assoc", alg.dim, _triple_scan(alg, compute))


def check_invder_zinbiel(alg: Algebra, op_name: str | None,
                         delta: LinearMap) -> CheckReport:
    _check_delta(alg, delta)
    op = alg.op(op_name)

    def compute(x, y, z):
        lhs = op.mul_sparse(delta.apply_sparse(x), op.mul_sparse(y, z))
        dz = delta.apply_sparse(z)
        rhs = _add(op.mul_sparse(op.mul_sparse(x, y), dz),
                   op.mul_sparse(op.mul_sparse(y, x), dz))
        return lhs, rhs

    return _report("invder_zinbiel", alg.dim, _triple_scan(alg, compute))


def check_zinbiel_aux_44(alg: Algebra, op_name: str | None,
                         delta: LinearMap) -> CheckReport:
    _check_delta(alg, delta)
    op = alg.op(op_name)

    def compute(x, y, z):
        return op.mul_sparse(delta.apply_sparse(x), op.mul_sparse(z, y)), \
               op.mul_sparse(delta.apply_sparse(z), op.mul_sparse(x, y))

    return _report("zinbiel_aux_44", alg.dim, _triple_scan(alg, compute))


def check_zinbiel_aux_45(alg: Algebra, op_name: str | None,
                         delta: LinearMap) -> CheckReport:
    _check_delta(alg, delta)
    op = alg.op(op_name)

    def compute(x, y, z):
        return op.mul_sparse(op.mul_sparse(x, y), delta.apply_sparse(z)), \
               op.mul_sparse(op.mul_sparse(x, z), delta.apply_sparse(y))

    return _report("zinbiel_aux_45", alg.dim, _triple_scan(alg, compute))


def check_invder_dendriform(alg: Algebra, delta: LinearMap
                            ) -> tuple[CheckReport, CheckReport, CheckReport]:
    """Twisted counterparts of the three dendriform axioms, in order."""
    _check_delta(alg, delta)
    left, right = _dendriform_ops(alg)

    def d(s):
        return delta.apply_sparse(s)

    def ax47(x, y, z):
        return left.mul_sparse(left.mul_sparse(x, y), d(z)), \
               left.mul_sparse(d(x), _add(left.mul_sparse(y, z),
                                          right.mul_sparse(y, z)))

    def ax48(x, y, z):
        return left.mul_sparse(right.mul_sparse(x, y), d(z)), \
               right.mul_sparse(d(x), left.mul_sparse(y, z))

    def ax49(x, y, z):
        return right.mul_sparse(d(x), right.mul_sparse(y, z)), \
               right.mul_sparse(_add(left.mul_sparse(x, y),
                                     right.mul_sparse(x, y)), d(z))

    return (_report("invder_dend_47", alg.dim, _triple_scan(alg, ax47)),
            _report("invder_dend_48", alg.dim, _triple_scan(alg, ax48)),
            _report("invder_dend_49", alg.dim, _triple_scan(alg, ax49)))


_PLAIN = {
    "skew_symmetry": check_skew_symmetry,
    "jacobi": check_jacobi,
    "associativity": check_associativity,
    "pre_lie": check_pre_lie,
    "zinbiel": check_zinbiel,
    "commutativity": check_commutativity,
}

_WITH_DELTA = {
    "invder_jacobi": check_invder_jacobi,
    "invder_prelie": check_invder_prelie,
    "invder_assoc": check_invder_assoc,
    "invder_zinbiel": check_invder_zinbiel,
    "zinbiel_aux_44": check_zinbiel_aux_44,
    "zinbiel_aux_45": check_zinbiel_aux_45,
    "identity_25": check_identity_25,
}

_DENDRIFORM_TRIOS = {
    "dendriform_1": 0, "dendriform_2": 1, "dendriform_3": 2,
    "invder_dend_47": 0, "invder_dend_48": 1, "invder_dend_49": 2,
}


def run_axiom(alg: Algebra, axiom: str, op_name: str | None = None,
              delta: LinearMap | None = None) -> CheckReport:
    """Dispatch a single axiom check by identifier."""
    if axiom in _PLAIN:
        return _PLAIN[axiom](alg, op_name)
    if axiom in _WITH_DELTA:
        if delta is None:
            raise InputError(f"axiom {axiom!r} needs a map")
        return _WITH_DELTA[axiom](alg, op_name, delta)
    if axiom in _DENDRIFORM_TRIOS:
        idx = _DENDRIFORM_TRIOS[axiom]
        if axiom.startswith("invder"):
            if delta is None:
                raise InputError(f"axiom {axiom!r} needs a map")
            return check_invder_dendriform(alg, delta)[idx]
        return check_dendriform(alg)[idx]
    raise InputError(f"unknown axiom {axiom!r}")


def kind_axioms(alg: Algebra, kind: str,
                op_name: str | None = None) -> list[CheckReport]:
    """Reports for the defining axioms of a structure kind."""
    if kind == "lie":
        return [check_skew_symmetry(alg, op_name), check_jacobi(alg, op_name)]
    if kind == "prelie":
        return [check_pre_lie(alg, op_name)]
    if kind == "associative":
        return [check_associativity(alg, op_name)]
    if kind == "zinbiel":
        return [check_zinbiel(alg, op_name)]
    if kind == "dendriform":
        return list(check_dendriform(alg))
    raise InputError(f"unknown structure kind {kind!r}")


def invder_identity_axioms(alg: Algebra, kind: str, delta: LinearMap,
                           op_name: str | None = None) -> list[CheckReport]:
    """Reports for the twist compatibility identities attached to a kind."""
    if kind == "lie":
        return [check_invder_jacobi(alg, op_name, delta)]
    if kind == "prelie":
        return [check_invder_prelie(alg, op_name, delta)]
    if kind == "associative":
        return [check_invder_assoc(alg, op_name, delta)]
    if kind == "zinbiel":
        return [check_invder_zinbiel(alg, op_name, delta),
                check_zinbiel_aux_44(alg, op_name, delta),
                check_zinbiel_aux_45(alg, op_name, delta)]
    if kind == "dendriform":
        return list(check_invder_dendriform(alg, delta))
    raise InputError(f"unknown structure kind {kind!r}")


def kinds_satisfied(alg: Algebra, op_name: str | None = None) -> tuple[str, ...]:
    """Single-operation kinds whose axioms actually hold for the table."""
    found = []
    if check_skew_symmetry(alg, op_name).holds and check_jacobi(alg, op_name).holds:
        found.append("lie")
    if check_pre_lie(alg, op_name).holds:
        found.append("prelie")
    if check_associativity(alg, op_name).holds:
        found.append("associative")
    if check_zinbiel(alg, op_name).holds:
        found.append("zinbiel")
    return tuple(found)
