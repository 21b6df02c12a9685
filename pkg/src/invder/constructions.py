"""Passages between structures carried by invertible derivations.

Each function here builds a new algebra from an old one (twisting by a map,
taking a commutator bracket, composing with a Rota-Baxter or endomorphism
operator) and returns it wrapped in a ConstructionResult together with the
verification reports for the axioms the output is supposed to satisfy.
Preconditions on the inputs are enforced eagerly with typed errors, so a
result object always describes a construction that was actually allowed to
run; the reports then record whether the advertised identities hold.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import (CheckReport, check_associativity, check_commutativity,
                     check_jacobi, check_pre_lie, check_skew_symmetry,
                     check_zinbiel, invder_identity_axioms, kind_axioms,
                     leibniz_witness, run_axiom)
from .derivations import InvDerVerdict, is_derivation, is_invder
from .errors import (CommutationFailureError, InputError, InvderError,
                     NotIdempotentError, NotInvDerError, NotMultiplicativeError,
                     NotRotaBaxterError, SourceAxiomFailureError,
                     SymmetryPreconditionFailureError)
from .model import (Algebra, AlgebraDocument, BilinearOp, LinearMap, Sparse,
                    algebra_to_dict)
from .rational import Q, ZERO


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed algebra plus the reports that vouch for it."""

    algebra: Algebra
    carried_delta: LinearMap | None
    verification: tuple[CheckReport, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.verification)

    def to_document(self) -> AlgebraDocument:
        maps = {"delta": self.carried_delta} if self.carried_delta else {}
        return AlgebraDocument.build(self.algebra, maps)

    def to_dict(self) -> dict:
        data = {
            "algebra": algebra_to_dict(self.to_document()),
            "ok": self.ok,
            "verification": [r.to_dict() for r in self.verification],
        }
        if self.notes:
            data["notes"] = list(self.notes)
        return data


def _resolve_single(alg: Algebra, op_name: str | None) -> str:
    if op_name is None:
        if len(alg.ops) != 1:
            raise InputError(
                "algebra has several operations; select one explicitly")
        return alg.ops[0][0]
    alg.op(op_name)
    return op_name


def _require_source(reports: list[CheckReport], what: str,
                    force: bool) -> None:
    bad = [r for r in reports if not r.holds]
    if bad and not force:
        raise SourceAxiomFailureError(
            f"source is not {what}: {bad[0].axiom} fails at "
            f"{bad[0].witness.indices}")


def _delta_reports(result: Algebra, kind: str, delta: LinearMap,
                   source_verdict: InvDerVerdict | None) -> list[CheckReport]:
    """Derivation reports for the carried map on the constructed algebra."""
    reports = [is_derivation(delta, result)]
    if source_verdict is not None and source_verdict.accepted:
        inv = delta.inverse()
        witness = None
        for _, op in result.ops:
            witness = leibniz_witness(op, inv)
            if witness is not None:
                break
        reports.append(CheckReport("inverse_derivation", witness is None,
                                   witness))
        reports.extend(invder_identity_axioms(result, kind, delta))
    return reports


def twist(alg: Algebra, delta: LinearMap, kind: str | None = None,
          op_name: str | None = None, force: bool = False) -> ConstructionResult:
    """Replace each product x y by delta(x y).

    The map must be an accepted invertible derivation of the structure being
    twisted; with force=True that gate is skipped and the verification
    reports simply record which axioms survive.
    """
    kind = kind or alg.kind_hint
    if kind is None:
        raise InputError("twist needs a structure kind, from the algebra "
                         "file or the kind argument")
    if kind == "dendriform":
        names = ["left", "right"]
        for n in names:
            alg.op(n)
    else:
        names = [_resolve_single(alg, op_name)]
    verdict = is_invder(delta, alg, names)
    if not verdict.accepted and not force:
        raise NotInvDerError(
            f"map is not InvDer for {alg.name!r}: {verdict.to_dict()}")
    twisted = {n: alg.op(n).twist(delta) for n in names}
    out = alg.with_ops(f"{alg.name}.twist", twisted, kind)
    reports = kind_axioms(out, kind)
    reports.extend(_delta_reports(out, kind, delta, verdict))
    return ConstructionResult(out, delta, tuple(reports))


@dataclass(frozen=True)
class YauVerdict:
    """Both sides of the twist equivalence for one kind.

    forward states the twisted algebra together with the map is a full
    structure of the kind (axioms plus the map staying accepted); backward
    states the same of the source.  The equivalence asserts they agree.
    """

    kind: str
    source_holds: bool
    twisted_holds: bool
    delta_invder_source: bool
    delta_invder_twisted: bool

    @property
    def forward(self) -> bool:
        return self.twisted_holds and self.delta_invder_twisted

    @property
    def backward(self) -> bool:
        return self.source_holds and self.delta_invder_source

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "source_holds": self.source_holds,
            "twisted_holds": self.twisted_holds,
            "delta_invder_source": self.delta_invder_source,
            "delta_invder_twisted": self.delta_invder_twisted,
            "forward": self.forward,
            "backward": self.backward,
        }


def yau_iff_check(alg: Algebra, delta: LinearMap, kind: str | None = None,
                  op_name: str | None = None) -> YauVerdict:
    """Evaluate both sides of the twist equivalence on one instance.

    Both sides are recomputed from scratch.  A disagreement is treated as
    an internal defect rather than a verdict, because the twist by the
    inverse map recovers the source, so the two sides stand or fall
    together.
    """
    kind = kind or alg.kind_hint
    if kind is None:
        raise InputError("iff check needs a structure kind")
    if kind == "dendriform":
        names = ["left", "right"]
        for n in names:
            alg.op(n)
    else:
        names = [_resolve_single(alg, op_name)]
    single = names[0] if len(names) == 1 else None
    verdict = is_invder(delta, alg, names)
    if not verdict.accepted:
        raise NotInvDerError(
            f"map is not InvDer for {alg.name!r}: {verdict.to_dict()}")
    twisted = alg.with_ops(f"{alg.name}.twist",
                           {n: alg.op(n).twist(delta) for n in names}, kind)
    out = YauVerdict(
        kind,
        all(r.holds for r in kind_axioms(alg, kind, single)),
        all(r.holds for r in kind_axioms(twisted, kind, single)),
        verdict.accepted,
        is_invder(delta, twisted, names).accepted,
    )
    if out.forward != out.backward:
        raise InvderError(
            "internal inconsistency: twist equivalence failed one-sided "
            f"on {alg.name!r} ({out.to_dict()})")
    return out


def commutator_lie(alg: Algebra, op_name: str | None = None,
                   delta: LinearMap | None = None) -> ConstructionResult:
    """Bracket [x, y] = x*y - y*x of a pre-Lie product.

    An optional map rides along: any derivation of the product is a
    derivation of the bracket, and an accepted invertible derivation stays
    accepted, so the bracket verification extends accordingly.
    """
    name = _resolve_single(alg, op_name)
    star = alg.op(name)
    _require_source([check_pre_lie(alg, name)], "pre-Lie", force=False)
    bracket = star - star.opposite()
    out = alg.with_ops(f"{alg.name}.lie", {"bracket": bracket}, "lie")
    reports = [check_skew_symmetry(out), check_jacobi(out)]
    verdict = None
    if delta is not None:
        if leibniz_witness(star, delta) is not None:
            raise InputError("map is not a derivation of the source product")
        verdict = is_invder(delta, alg, [name])
        reports.extend(_delta_reports(out, "lie", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports))


@dataclass(frozen=True)
class RotaBaxterOp:
    """A linear operator tagged with the weight it is meant to satisfy."""

    map: LinearMap
    weight: Q = ZERO


def commutes(a: LinearMap, b: LinearMap) -> bool:
    """Exact commutation of two maps of the same dimension."""
    if a.dim != b.dim:
        raise InputError("maps have different dimensions")
    return a.commutes_with(b)


def _rbo_parts(rbo: LinearMap | RotaBaxterOp) -> tuple[LinearMap, Q]:
    if isinstance(rbo, RotaBaxterOp):
        return rbo.map, Q(rbo.weight)
    return rbo, ZERO


def is_rota_baxter(r: LinearMap | RotaBaxterOp, alg: Algebra,
                   op_name: str | None = None,
                   weight: Q | None = None) -> CheckReport:
    """Rota-Baxter identity of the given weight on all basis pairs."""
    r, tagged = _rbo_parts(r)
    if weight is None:
        weight = tagged
    op = alg.op(op_name)
    if r.dim != alg.dim:
        raise InputError("map dimension does not match algebra dimension")
    from .axioms import Witness
    from .model import sparse_to_vector
    lam = Q(weight)
    for i in range(alg.dim):
        for j in range(alg.dim):
            x, y = alg.unit_sparse(i), alg.unit_sparse(j)
            rx, ry = r.apply_sparse(x), r.apply_sparse(y)
            lhs = op.mul_sparse(rx, ry)
            inner: Sparse = {}
            for part in (op.mul_sparse(rx, y), op.mul_sparse(x, ry)):
                for k, c in part.items():
                    inner[k] = inner.get(k, ZERO) + c
            if lam:
                for k, c in op.mul_sparse(x, y).items():
                    inner[k] = inner.get(k, ZERO) + lam * c
            rhs = r.apply_sparse(inner)
            if lhs != rhs:
                return CheckReport("rota_baxter", False,
                                   Witness((i, j),
                                           sparse_to_vector(alg.dim, lhs),
                                           sparse_to_vector(alg.dim, rhs)))
    return CheckReport("rota_baxter", True)


def _require_carried(alg: Algebra, names: list[str], delta: LinearMap,
                     operator: LinearMap) -> InvDerVerdict:
    verdict = is_invder(delta, alg, names)
    if not verdict.accepted:
        raise NotInvDerError(
            f"carried map is not InvDer for {alg.name!r}: {verdict.to_dict()}")
    if not delta.commutes_with(operator):
        raise CommutationFailureError(
            "carried map does not commute with the operator")
    return verdict


def _weight_zero_rbo(rbo: LinearMap | RotaBaxterOp, alg: Algebra,
                     name: str) -> LinearMap:
    r, weight = _rbo_parts(rbo)
    if weight != ZERO:
        raise InputError("the pre-Lie passage needs a weight zero operator")
    rb = is_rota_baxter(r, alg, name, ZERO)
    if not rb.holds:
        raise NotRotaBaxterError(
            f"operator fails the weight zero identity at {rb.witness.indices}")
    return r


def rb_prelie_from_lie(alg: Algebra, rbo: LinearMap | RotaBaxterOp,
                       op_name: str | None = None,
                       delta: LinearMap | None = None) -> ConstructionResult:
    """Pre-Lie product x*y = [Rx, y] from a weight zero Rota-Baxter map."""
    name = _resolve_single(alg, op_name)
    _require_source(kind_axioms(alg, "lie", name), "a Lie bracket", force=False)
    r = _weight_zero_rbo(rbo, alg, name)
    verdict = None
    if delta is not None:
        verdict = _require_carried(alg, [name], delta, r)
    star = alg.op(name).compose_left(r)
    out = alg.with_ops(f"{alg.name}.rb_prelie", {"star": star}, "prelie")
    reports = [check_pre_lie(out)]
    # consistency at the level the source theorem uses the product: the
    # commutator of the new product must again satisfy Jacobi
    comm = alg.with_ops(f"{alg.name}.rb_prelie_comm",
                        {"bracket": star - star.opposite()}, "lie")
    reports.append(check_jacobi(comm))
    if delta is not None:
        reports.extend(_delta_reports(out, "prelie", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports),
                              ("weight 0 Rota-Baxter product",))


def rb_prelie_from_assoc(alg: Algebra, rbo: LinearMap | RotaBaxterOp,
                         op_name: str | None = None,
                         delta: LinearMap | None = None) -> ConstructionResult:
    """Pre-Lie product x*y = (Rx) y - y (Rx) from an associative product."""
    name = _resolve_single(alg, op_name)
    _require_source(kind_axioms(alg, "associative", name), "associative",
                    force=False)
    r = _weight_zero_rbo(rbo, alg, name)
    verdict = None
    if delta is not None:
        verdict = _require_carried(alg, [name], delta, r)
        _require_source([run_axiom(alg, "invder_assoc", name, delta)],
                        "InvDer associative", force=False)
    mu = alg.op(name)
    star = mu.compose_left(r) - mu.compose_right(r).opposite()
    out = alg.with_ops(f"{alg.name}.rb_prelie", {"star": star}, "prelie")
    reports = [check_pre_lie(out)]
    if delta is not None:
        reports.extend(_delta_reports(out, "prelie", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports),
                              ("weight 0 Rota-Baxter product",))


def endo_lie_from_assoc(alg: Algebra, endo: LinearMap,
                        op_name: str | None = None,
                        delta: LinearMap | None = None) -> ConstructionResult:
    """Bracket [x, y] = (Px) y - (Py) x through an idempotent endomorphism.

    The operator must be an algebra endomorphism of the associative product
    (multiplicative and linear) and idempotent; under those hypotheses the
    bracket is Lie, and a commuting accepted map is carried across.
    """
    name = _resolve_single(alg, op_name)
    _require_source(kind_axioms(alg, "associative", name), "associative",
                    force=False)
    mu = alg.op(name)
    if endo.dim != alg.dim:
        raise InputError("map dimension does not match algebra dimension")
    if endo.compose(endo) != endo:
        raise NotIdempotentError("operator is not idempotent")
    for i in range(alg.dim):
        for j in range(alg.dim):
            x, y = alg.unit_sparse(i), alg.unit_sparse(j)
            lhs = endo.apply_sparse(mu.mul_sparse(x, y))
            rhs = mu.mul_sparse(endo.apply_sparse(x), endo.apply_sparse(y))
            if lhs != rhs:
                raise NotMultiplicativeError(
                    f"operator is not multiplicative at ({i}, {j})")
    verdict = None
    if delta is not None:
        verdict = _require_carried(alg, [name], delta, endo)
        _require_source([run_axiom(alg, "invder_assoc", name, delta)],
                        "InvDer associative", force=False)
    half = mu.compose_left(endo)
    bracket = half - half.opposite()
    out = alg.with_ops(f"{alg.name}.endo_lie", {"bracket": bracket}, "lie")
    reports = [check_skew_symmetry(out), check_jacobi(out)]
    if delta is not None:
        reports.extend(_delta_reports(out, "lie", delta, verdict))
    return ConstructionResult(
        out, delta, tuple(reports),
        ("operator taken as an idempotent multiplicative endomorphism",))


def _zinbiel_source(alg: Algebra, op_name: str | None,
                    force: bool) -> tuple[str, BilinearOp]:
    name = _resolve_single(alg, op_name)
    _require_source([check_zinbiel(alg, name)], "zinbiel", force)
    return name, alg.op(name)


def zinbiel_to_assoc(alg: Algebra, op_name: str | None = None,
                     delta: LinearMap | None = None,
                     force: bool = False) -> ConstructionResult:
    """Symmetrised product x y = x<>y + y<>x, commutative associative."""
    name, dia = _zinbiel_source(alg, op_name, force)
    verdict = _accepted_or_raise(alg, [name], delta)
    mu = dia + dia.opposite()
    out = alg.with_ops(f"{alg.name}.assoc", {"product": mu}, "associative")
    reports = [check_associativity(out), check_commutativity(out)]
    if delta is not None:
        reports.extend(_delta_reports(out, "associative", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports))


def zinbiel_to_lie(alg: Algebra, op_name: str | None = None,
                   delta: LinearMap | None = None,
                   force: bool = False) -> ConstructionResult:
    """Bracket [x, y] = x<>y - y<>x of a zinbiel product."""
    name, dia = _zinbiel_source(alg, op_name, force)
    verdict = _accepted_or_raise(alg, [name], delta)
    bracket = dia - dia.opposite()
    out = alg.with_ops(f"{alg.name}.lie", {"bracket": bracket}, "lie")
    reports = [check_skew_symmetry(out), check_jacobi(out)]
    if delta is not None:
        reports.extend(_delta_reports(out, "lie", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports))


def _accepted_or_raise(alg: Algebra, names: list[str],
                       delta: LinearMap | None) -> InvDerVerdict | None:
    if delta is None:
        return None
    verdict = is_invder(delta, alg, names)
    if not verdict.accepted:
        raise NotInvDerError(
            f"carried map is not InvDer for {alg.name!r}: {verdict.to_dict()}")
    return verdict


def _dendriform_source(alg: Algebra, force: bool) -> tuple[BilinearOp, BilinearOp]:
    left, right = alg.op("left"), alg.op("right")
    _require_source(kind_axioms(alg, "dendriform"), "dendriform", force)
    return left, right


def dendriform_to_zinbiel(alg: Algebra, delta: LinearMap | None = None,
                          force: bool = False) -> ConstructionResult:
    """Read the right half-product as zinbiel when the halves mirror."""
    left, right = _dendriform_source(alg, force)
    if left != right.opposite():
        raise SymmetryPreconditionFailureError(
            "half-products are not mirror images of each other")
    verdict = _accepted_or_raise(alg, ["left", "right"], delta)
    out = alg.with_ops(f"{alg.name}.zinbiel", {"diamond": right}, "zinbiel")
    reports = [check_zinbiel(out)]
    if delta is not None:
        reports.extend(_delta_reports(out, "zinbiel", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports))


def dendriform_to_assoc(alg: Algebra, delta: LinearMap | None = None,
                        force: bool = False) -> ConstructionResult:
    """Total product x y = x<y + x>y of a dendriform pair."""
    left, right = _dendriform_source(alg, force)
    verdict = _accepted_or_raise(alg, ["left", "right"], delta)
    mu = left + right
    out = alg.with_ops(f"{alg.name}.assoc", {"product": mu}, "associative")
    reports = [check_associativity(out)]
    if delta is not None:
        reports.extend(_delta_reports(out, "associative", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports))


def dendriform_to_prelie(alg: Algebra, delta: LinearMap | None = None,
                         force: bool = False) -> ConstructionResult:
    """Pre-Lie product x*y = x>y - y<x of a dendriform pair."""
    left, right = _dendriform_source(alg, force)
    verdict = _accepted_or_raise(alg, ["left", "right"], delta)
    star = right - left.opposite()
    out = alg.with_ops(f"{alg.name}.prelie", {"star": star}, "prelie")
    reports = [check_pre_lie(out)]
    if delta is not None:
        reports.extend(_delta_reports(out, "prelie", delta, verdict))
    return ConstructionResult(out, delta, tuple(reports))
