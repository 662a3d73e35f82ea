"""Graded chain complexes built from hyperedge bases.

A hyperedge with k vertices sits in degree k - 1.  The i-th face of an
edge drops the vertex at position i (sorted position for unordered edges,
coordinate position for directed ones) and carries sign (-1)^i, so the
boundary of a degree-n basis edge is the usual alternating sum over its
n + 1 faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import linalg
from .errors import InvariantViolation, ResourceCapError
from .fields import QQ
from .hypergraphs import Edge, Hypergraph, Hyperdigraph, delta_closure
from .linalg import SparseMatrix

DEFAULT_SIMPLEX_CAP = 16


def face(edge: Edge, i: int) -> Edge:
    return edge[:i] + edge[i + 1 :]


@dataclass(frozen=True)
class GradedBasis:
    """Ordered edge labels per degree; labels[n] holds (n+1)-vertex edges."""

    labels: tuple[tuple[Edge, ...], ...]
    directed: bool

    def __post_init__(self):
        for n, level in enumerate(self.labels):
            if len(set(level)) != len(level):
                raise ValueError(f"duplicate labels in degree {n}")
            if any(len(e) != n + 1 for e in level):
                raise ValueError(f"degree {n} must hold edges of cardinality {n + 1}")

    @property
    def top_degree(self) -> int:
        return len(self.labels) - 1

    def dims(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.labels)

    def index(self, n: int) -> dict[Edge, int]:
        return {e: k for k, e in enumerate(self.labels[n])}


def basis_from_levels(levels: Iterable[Iterable[Edge]], directed: bool) -> GradedBasis:
    return GradedBasis(tuple(tuple(level) for level in levels), directed)


def closure_basis(h: Hypergraph | Hyperdigraph) -> GradedBasis:
    """Basis of the deletion closure of h, degrees 0..top, sorted labels."""
    closed = delta_closure(h)
    top = closed.max_cardinality()
    levels = [closed.level(n + 1) for n in range(top)]
    return GradedBasis(tuple(levels), h.directed)


def hypergraph_basis(h: Hypergraph | Hyperdigraph) -> GradedBasis:
    """Basis spanned by the edges of h itself (degrees may be ragged)."""
    top = h.max_cardinality()
    levels = [h.level(n + 1) for n in range(top)]
    return GradedBasis(tuple(levels), h.directed)


def full_simplex_basis(
    vertices: Iterable[int], max_degree: int, cap: int = DEFAULT_SIMPLEX_CAP
) -> GradedBasis:
    """All subsets of the vertex set up to max_degree, as an unordered basis."""
    vs = sorted(set(vertices))
    if len(vs) > cap:
        raise ResourceCapError(
            f"full simplex on {len(vs)} vertices exceeds the cap of {cap}"
        )
    levels = []
    for n in range(max_degree + 1):
        if n + 1 > len(vs):
            break
        levels.append(tuple(combinations(vs, n + 1)))
    return GradedBasis(tuple(levels), directed=False)


def boundary_matrix(
    basis: GradedBasis, n: int, field=QQ, *, missing: str = "error"
) -> tuple[SparseMatrix, tuple[Edge, ...]]:
    """Boundary from degree n to degree n - 1 over the given basis.

    Codomain labels absent from the basis are either rejected
    (missing="error") or appended to an extended codomain
    (missing="extend"); the codomain labels actually used are returned.
    """
    if n < 1 or n > basis.top_degree:
        raise ValueError(f"no boundary at degree {n}")
    domain = basis.labels[n]
    codomain = list(basis.labels[n - 1])
    index = {e: k for k, e in enumerate(codomain)}
    one = field.one
    entries: dict[tuple[int, int], object] = {}
    for j, e in enumerate(domain):
        for i in range(len(e)):
            f = face(e, i)
            row = index.get(f)
            if row is None:
                if missing == "error":
                    raise ValueError(f"face {f} of {e} is not in the degree-{n-1} basis")
                index[f] = row = len(codomain)
                codomain.append(f)
            sign = one if i % 2 == 0 else -one
            key = (row, j)
            cur = entries.get(key)
            val = sign if cur is None else cur + sign
            if val:
                entries[key] = val
            elif cur is not None:
                del entries[key]
    matrix = SparseMatrix(field, len(codomain), len(domain), entries)
    return matrix, tuple(codomain)


@dataclass(frozen=True)
class ChainComplex:
    """Exact chain complex: per-degree dimensions and boundary matrices.

    boundaries[n] maps degree n to degree n - 1; boundaries[0] is the empty
    matrix.  Degrees beyond the top are zero-dimensional.
    """

    field: object
    dims: tuple[int, ...]
    boundaries: tuple[SparseMatrix, ...]
    labels: tuple[tuple[Edge, ...], ...] | None = None

    def __post_init__(self):
        if len(self.boundaries) != len(self.dims):
            raise ValueError("one boundary per degree expected")
        for n in range(1, len(self.dims)):
            b = self.boundaries[n]
            if b.shape != (self.dims[n - 1], self.dims[n]):
                raise ValueError(f"boundary {n} has shape {b.shape}")

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def dim(self, n: int) -> int:
        return self.dims[n] if 0 <= n <= self.top_degree else 0

    def boundary_or_zero(self, n: int) -> SparseMatrix:
        if 1 <= n <= self.top_degree:
            return self.boundaries[n]
        return SparseMatrix.zeros(self.field, self.dim(n - 1), self.dim(n))

    def validate(self) -> None:
        """Raise InvariantViolation unless every composite boundary is zero."""
        for n in range(1, self.top_degree):
            product = self.boundaries[n] @ self.boundaries[n + 1]
            if not product.is_zero():
                (i, j), _ = next(iter(sorted(product.entries.items())))
                label = self.labels[n + 1][j] if self.labels else f"basis column {j}"
                raise InvariantViolation(
                    f"boundary squared is nonzero in degree {n + 1}",
                    certificate={"degree": n + 1, "chain": str(label), "row": i},
                )


def chain_complex_from_basis(basis: GradedBasis, field=QQ) -> ChainComplex:
    """Chain complex on a face-closed basis (raises if a face is missing)."""
    dims = basis.dims()
    boundaries = [SparseMatrix.zeros(field, 0, dims[0] if dims else 0)]
    for n in range(1, len(dims)):
        matrix, _ = boundary_matrix(basis, n, field, missing="error")
        boundaries.append(matrix)
    complex_ = ChainComplex(field, dims, tuple(boundaries), labels=basis.labels)
    complex_.validate()
    return complex_


def empty_complex(field=QQ) -> ChainComplex:
    return ChainComplex(field, (), (), labels=())


def ambient_complex(
    h: Hypergraph | Hyperdigraph,
    mode: str = "closure",
    *,
    vertices: Iterable[int] | None = None,
    max_degree: int | None = None,
    field=QQ,
    cap: int = DEFAULT_SIMPLEX_CAP,
) -> ChainComplex:
    """Chain complex of the deletion closure or of a full simplex.

    closure mode uses the closure of h; full_simplex mode spans all subsets
    of the given vertex set up to max_degree (vertex count capped).
    """
    if mode == "closure":
        if not h.edges:
            return empty_complex(field)
        return chain_complex_from_basis(closure_basis(h), field)
    if mode == "full_simplex":
        if h.directed:
            raise ValueError("full simplex ambient applies to unordered hypergraphs")
        vs = set(h.vertices if vertices is None else vertices)
        if not {v for e in h.edges for v in e} <= vs:
            raise ValueError("ambient vertices must cover the hypergraph support")
        degree = max_degree if max_degree is not None else max(h.max_cardinality() - 1, 0)
        basis = full_simplex_basis(vs, degree, cap=cap)
        return chain_complex_from_basis(basis, field)
    raise ValueError(f"unknown ambient mode {mode!r}")


@dataclass(frozen=True)
class EmbeddedComplex:
    """A subcomplex of an ambient chain complex with explicit embeddings.

    embeddings[n] has the internal degree-n basis vectors as columns, in
    ambient coordinates; the internal boundaries are the ambient boundaries
    restricted to those columns.
    """

    ambient: ChainComplex
    complex: ChainComplex
    embeddings: tuple[SparseMatrix, ...]

    def dim(self, n: int) -> int:
        return self.complex.dim(n)


def _edge_indices(ambient: ChainComplex, h, n: int) -> list[int]:
    if ambient.labels is None:
        raise ValueError("ambient complex must carry labels")
    index = {e: k for k, e in enumerate(ambient.labels[n])}
    out = []
    for e in h.level(n + 1):
        if e not in index:
            raise ValueError(f"edge {e} is missing from the ambient basis")
        out.append(index[e])
    return out


def _restricted_complex(
    ambient: ChainComplex, columns: list[list[dict]]
) -> EmbeddedComplex:
    """Package per-degree ambient-coordinate columns as an EmbeddedComplex."""
    field = ambient.field
    embeddings = [
        SparseMatrix.from_columns(field, ambient.dim(n), cols)
        for n, cols in enumerate(columns)
    ]
    dims = tuple(e.ncols for e in embeddings)
    if not dims:
        return EmbeddedComplex(ambient, empty_complex(field), ())
    boundaries = [SparseMatrix.zeros(field, 0, dims[0])]
    for n in range(1, len(dims)):
        image = ambient.boundary_or_zero(n) @ embeddings[n]
        restricted = linalg.solve_matrix(embeddings[n - 1], image)
        if restricted is None:
            raise InvariantViolation(
                f"boundary does not stay inside the subcomplex at degree {n}"
            )
        boundaries.append(restricted)
    sub = ChainComplex(field, dims, tuple(boundaries))
    sub.validate()
    return EmbeddedComplex(ambient, sub, tuple(embeddings))


def inf_complex(
    h: Hypergraph | Hyperdigraph,
    field=QQ,
    ambient: ChainComplex | None = None,
) -> EmbeddedComplex:
    """Largest subcomplex whose chains and boundaries stay in the edge span.

    Degreewise this is the span of the degree-n edges intersected with the
    boundary preimage of the span of the degree-(n-1) edges, computed as a
    kernel problem inside the closure ambient (the result does not depend
    on that choice).
    """
    if ambient is None:
        ambient = ambient_complex(h, "closure", field=field)
    top = ambient.top_degree
    columns: list[list[dict]] = []
    for n in range(top + 1):
        cols_h = _edge_indices(ambient, h, n)
        if not cols_h:
            columns.append([])
            continue
        if n == 0:
            keep = {row for row in cols_h}
            columns.append([{row: field.one} for row in sorted(keep)])
            continue
        rows_in = set(_edge_indices(ambient, h, n - 1))
        boundary = ambient.boundaries[n]
        # constraint: boundary components outside span(h_{n-1}) must vanish
        constraint_entries = {}
        row_map: dict[int, int] = {}
        col_map = {c: k for k, c in enumerate(cols_h)}
        for (i, j), v in boundary.entries.items():
            if j in col_map and i not in rows_in:
                row = row_map.setdefault(i, len(row_map))
                constraint_entries[(row, col_map[j])] = v
        constraint = SparseMatrix(field, len(row_map), len(cols_h), constraint_entries)
        kernel = linalg.kernel_basis(constraint)
        columns.append(
            [{cols_h[k]: v for k, v in vec.items()} for vec in kernel]
        )
    return _restricted_complex(ambient, columns)


def sup_complex(
    h: Hypergraph | Hyperdigraph,
    field=QQ,
    ambient: ChainComplex | None = None,
) -> EmbeddedComplex:
    """Smallest subcomplex containing the edge span.

    Degreewise the span of the degree-n edges plus the boundaries of the
    degree-(n+1) edges, over a reduced column basis.
    """
    if ambient is None:
        ambient = ambient_complex(h, "closure", field=field)
    top = ambient.top_degree
    columns = []
    for n in range(top + 1):
        cols: list[dict] = [{row: field.one} for row in _edge_indices(ambient, h, n)]
        if n + 1 <= top:
            boundary = ambient.boundaries[n + 1]
            for j in _edge_indices(ambient, h, n + 1):
                col = boundary.column(j)
                if col:
                    cols.append(col)
        stacked = SparseMatrix.from_columns(field, ambient.dim(n), cols)
        keep = linalg.independent_columns(stacked)
        columns.append([cols[j] for j in keep])
    return _restricted_complex(ambient, columns)


def span_complex(
    h: Hypergraph | Hyperdigraph, field=QQ, ambient: ChainComplex | None = None
) -> EmbeddedComplex:
    """The chains of h itself inside the ambient (only valid if simplicial)."""
    if ambient is None:
        ambient = ambient_complex(h, "closure", field=field)
    columns = [
        [{row: field.one} for row in _edge_indices(ambient, h, n)]
        for n in range(ambient.top_degree + 1)
    ]
    return _restricted_complex(ambient, columns)


def unit_columns(field, indices: Iterable[int]) -> list[dict]:
    return [{i: field.one} for i in indices]


def face_table(basis: GradedBasis) -> dict[Edge, tuple[Edge, ...]]:
    """Explicit face maps: each edge of length >= 2 maps to its face tuple."""
    table = {}
    for level in basis.labels[1:]:
        for e in level:
            table[e] = tuple(face(e, i) for i in range(len(e)))
    return table


def delta_identity_check(table: dict[Edge, tuple[Edge, ...]]) -> bool:
    """Verify d_i d_j = d_{j-1} d_i for i < j on every tabulated element.

    Intermediate faces of length >= 2 must themselves be tabulated;
    a missing intermediate is a malformed table and raises.
    """

    def apply(e: Edge, i: int) -> Edge:
        if len(e) == 1:
            raise ValueError("no faces below degree 0")
        if e not in table:
            raise ValueError(f"face table is missing {e}")
        faces = table[e]
        if len(faces) != len(e):
            raise ValueError(f"face table arity mismatch at {e}")
        return faces[i]

    for e in table:
        n = len(e) - 1
        if n < 2:
            continue
        for j in range(1, n + 1):
            for i in range(j):
                if apply(apply(e, j), i) != apply(apply(e, i), j - 1):
                    return False
    return True
