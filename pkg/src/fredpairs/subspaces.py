"""Canonical subspaces of Q^n and quotient-space machinery.

Every subspace is stored by its reduced row-echelon basis, so two subspaces
are equal iff their basis matrices are identical.  Complements are always the
orthogonal complement under the standard dot product, which makes every
choice in the package deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, PreconditionError
from .matrices import RatMatrix, vstack


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: RatMatrix  # k x ambient_dim, rows in reduced echelon form

    @staticmethod
    def spanned_by(rows: RatMatrix) -> "Subspace":
        """Canonicalize a spanning set (rows of a matrix) into a Subspace."""
        result = rows.rref()
        basis = RatMatrix(
            result.rank, rows.cols, [result.reduced.row(i) for i in range(result.rank)]
        )
        return Subspace(rows.cols, basis)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, RatMatrix.zero(0, ambient_dim))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, RatMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def _require_same_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        return Subspace.spanned_by(vstack(self.basis, other.basis))

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection, via orthogonal complements: U & V = (U^o + V^o)^o."""
        self._require_same_ambient(other)
        return orthogonal_complement(orthogonal_complement(self) + orthogonal_complement(other))

    def contains(self, other: "Subspace") -> bool:
        self._require_same_ambient(other)
        return (self + other).dim == self.dim

    def contains_vector(self, vector: RatMatrix) -> bool:
        """Membership of a column vector."""
        return self.contains(Subspace.spanned_by(vector.transpose()))

    def to_json_obj(self) -> dict:
        return {"ambient": self.ambient_dim, "basis": self.basis.to_json_obj()}


@dataclass(frozen=True)
class ComplementWitness:
    within: Subspace
    part: Subspace
    complement: Subspace


@dataclass(frozen=True)
class QuotientStructure:
    """A quotient Q^n / killed materialized as a coordinate space.

    ``projection`` is the matrix of the quotient map pi restricted to the
    chosen coordinates, ``section`` a right inverse of it whose image is the
    orthogonal complement of ``killed``.
    """

    ambient_dim: int
    killed: Subspace
    quotient_dim: int
    projection: RatMatrix  # quotient_dim x ambient_dim
    section: RatMatrix  # ambient_dim x quotient_dim


def kernel_basis(a: RatMatrix) -> Subspace:
    """The null space {x : Ax = 0} as a canonical subspace of the domain."""
    result = a.rref()
    red, pivots = result.reduced, result.pivot_columns
    pivot_set = set(pivots)
    vectors = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [0] * a.cols
        v[free] = 1
        for r, p in enumerate(pivots):
            v[p] = -red[r, free]
        vectors.append(v)
    return Subspace.spanned_by(RatMatrix(len(vectors), a.cols, vectors))


def image_basis(a: RatMatrix) -> Subspace:
    """The column span of A as a canonical subspace of the codomain."""
    return Subspace.spanned_by(a.transpose())


def orthogonal_complement(u: Subspace) -> Subspace:
    """Orthogonal complement of U in its ambient space (standard dot product)."""
    return kernel_basis(u.basis)


def quotient_dim(u: Subspace, v: Subspace) -> int:
    """dim U/V for V contained in U."""
    if not u.contains(v):
        raise PreconditionError("quotient_dim requires V contained in U")
    return u.dim - v.dim


def complement(part: Subspace, within: Subspace) -> ComplementWitness:
    """Orthogonal complement of ``part`` inside ``within``.

    The standard dot product is positive definite on Q^n, so the complement
    always exists and the direct-sum invariants hold exactly.
    """
    if not within.contains(part):
        raise PreconditionError("complement requires part contained in within")
    comp = within & orthogonal_complement(part)
    return ComplementWitness(within=within, part=part, complement=comp)


def quotient(ambient_dim: int, killed: Subspace) -> QuotientStructure:
    """Materialize Q^ambient_dim / killed with orthogonal section.

    With C the echelon basis of the orthogonal complement of ``killed`` (rows),
    the section is C^T and the projection (C C^T)^-1 C, so that
    projection @ section = identity and killed is exactly the kernel of the
    projection.
    """
    if killed.ambient_dim != ambient_dim:
        raise DimensionError("killed subspace lives in the wrong ambient space")
    c = orthogonal_complement(killed).basis
    projection = (c @ c.transpose()).inverse() @ c
    return QuotientStructure(
        ambient_dim=ambient_dim,
        killed=killed,
        quotient_dim=c.rows,
        projection=projection,
        section=c.transpose(),
    )


def push_image(a: RatMatrix, u: Subspace) -> Subspace:
    """The image A(U) as a canonical subspace of the codomain."""
    if a.cols != u.ambient_dim:
        raise DimensionError("matrix does not act on the subspace's ambient space")
    return Subspace.spanned_by((a @ u.basis.transpose()).transpose())


def induced_map(a: RatMatrix, q_dom: QuotientStructure, q_cod: QuotientStructure) -> RatMatrix:
    """Factor A through the two quotients.

    Requires A(killed_dom) contained in killed_cod; the returned map A~
    satisfies A~ @ projection_dom = projection_cod @ A exactly.
    """
    if a.cols != q_dom.ambient_dim or a.rows != q_cod.ambient_dim:
        raise DimensionError("matrix shape does not match the quotient structures")
    if not q_cod.killed.contains(push_image(a, q_dom.killed)):
        raise PreconditionError("A does not map killed_dom into killed_cod")
    a_tilde = q_cod.projection @ a @ q_dom.section
    assert a_tilde @ q_dom.projection == q_cod.projection @ a
    return a_tilde
