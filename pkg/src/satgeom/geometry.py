"""Projective planes of order q and point enumeration for PG(N,q).

Points of PG(2,q) are normalized homogeneous triples (first nonzero
coordinate = 1), indexed in lexicographic order of the coordinate tuple:

    index 0       : (0,0,1)
    index 1+c     : (0,1,c)
    index 1+q+b*q+c : (1,b,c)

Lines are indexed by their normalized dual vector through the same map, so
for the generated plane the incidence relation is symmetric: point i lies
on line j exactly when vector(i) . vector(j) = 0.  Planes loaded from
incidence files carry no coordinates and may be non-Desarguesian.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import AxiomViolation, ParseError, ResourceLimit, SamePoint
from .field import FieldSpec

# q**2 * q elements per vectorized construction chunk
_CHUNK_ELEMS = 1 << 24


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, ...]
    index: int


class PlaneModel:
    """Incidence structure of a projective plane of order q.

    lines_pts[j] is the sorted array of the q+1 point indices on line j;
    pt_lines[i] the sorted array of the q+1 line indices through point i.
    Immutable after construction.
    """

    def __init__(self, q, lines_pts, pt_lines, coords=None, field=None, source="generated-PG"):
        self.q = int(q)
        self.v = self.q * self.q + self.q + 1
        self.b = self.v
        self.lines_pts = lines_pts
        self.pt_lines = pt_lines
        self.coords = coords
        self.field = field
        self.source = source

    def line_points(self, j: int) -> np.ndarray:
        return self.lines_pts[j]

    def lines_of_point(self, i: int) -> np.ndarray:
        return self.pt_lines[i]

    def proj_point(self, i: int) -> ProjPoint:
        if self.coords is None:
            raise ValueError("plane loaded from file carries no coordinates")
        return ProjPoint(tuple(int(c) for c in self.coords[i]), i)

    def line_through(self, a: int, b: int) -> int:
        """Index of the unique line through two distinct points."""
        if a == b:
            raise SamePoint(f"line through requires two distinct points, got {a} twice")
        if self.coords is not None and self.field is not None:
            f = self.field
            pa, pb = self.coords[a], self.coords[b]
            d = [
                f.sub(f.mul(int(pa[1]), int(pb[2])), f.mul(int(pa[2]), int(pb[1]))),
                f.sub(f.mul(int(pa[2]), int(pb[0])), f.mul(int(pa[0]), int(pb[2]))),
                f.sub(f.mul(int(pa[0]), int(pb[1])), f.mul(int(pa[1]), int(pb[0]))),
            ]
            return _vector_index(f, d)
        common = np.intersect1d(self.pt_lines[a], self.pt_lines[b], assume_unique=True)
        if common.size != 1:
            raise AxiomViolation("pair-uniqueness", f"points {a},{b} lie on {common.size} lines")
        return int(common[0])

    def __repr__(self):
        return f"PlaneModel(q={self.q}, v={self.v}, source={self.source!r})"


def line_through(plane: PlaneModel, a: int, b: int) -> int:
    return plane.line_through(a, b)


def _vector_index(field: FieldSpec, vec) -> int:
    """Canonical index of a normalized-or-not nonzero coordinate triple."""
    q = field.q
    v0, v1, v2 = (int(c) for c in vec)
    if v0 != 0:
        s = field.inv(v0)
        return 1 + q + field.mul(s, v1) * q + field.mul(s, v2)
    if v1 != 0:
        s = field.inv(v1)
        return 1 + field.mul(s, v2)
    if v2 != 0:
        return 0
    raise ValueError("zero vector has no projective point")


def _pg2_coords(field: FieldSpec) -> np.ndarray:
    q = field.q
    coords = np.empty((q * q + q + 1, 3), dtype=np.int64)
    coords[0] = (0, 0, 1)
    coords[1 : 1 + q, 0] = 0
    coords[1 : 1 + q, 1] = 1
    coords[1 : 1 + q, 2] = np.arange(q)
    tail = coords[1 + q :]
    tail[:, 0] = 1
    tail[:, 1] = np.repeat(np.arange(q), q)
    tail[:, 2] = np.tile(np.arange(q), q)
    return coords


def build_pg2(field: FieldSpec, max_points: int = 1_050_000) -> PlaneModel:
    """Generate PG(2,q) over the given field with canonical indexing.

    Each line's point list is assembled already sorted: points with a
    leading 1 are parametrized by the middle coordinate, which makes their
    indices increase, and the single point with leading 0 has a smaller
    index than all of them.
    """
    q = field.q
    v = q * q + q + 1
    if v > max_points:
        raise ResourceLimit(f"PG(2,{q}) has {v} points, cap is {max_points}")

    t = np.arange(q, dtype=np.int32)
    base = (1 + q + t * q).astype(np.int32)  # index of (1, x1, 0) by x1
    lines = np.empty((v, q + 1), dtype=np.int32)

    # line (0,0,1): points (0,1,0) and (1,t,0)
    lines[0, 0] = 1
    lines[0, 1:] = base

    # line (0,1,0): points (0,0,1) and (1,0,t)
    lines[1, 0] = 0
    lines[1, 1:] = 1 + q + t

    # lines (0,1,c), c != 0: points (0,1,-1/c) and (1, x1, -x1/c)
    c = t[1:]
    ic = field.inv_arr(c)
    lines[2 : 1 + q, 0] = 1 + field.neg_arr(ic)
    lines[2 : 1 + q, 1:] = base[None, :] + field.neg_arr(field.mul_arr(ic[:, None], t[None, :]))

    # line (1,0,0): points (0,0,1) and (0,1,t)
    lines[1 + q, 0] = 0
    lines[1 + q, 1:] = 1 + t

    # lines (1,b,0), b != 0: points (0,0,1) and (1, -1/b, x2)
    bnz = t[1:]
    nib = field.neg_arr(field.inv_arr(bnz))
    lines[1 + q + bnz * q, 0] = 0
    lines[1 + q + bnz.astype(np.int64) * q, 1:] = (1 + q + nib * q)[:, None] + t[None, :]

    # lines (1,b,c), c != 0: points (0,1,-b/c) and (1, x1, -(1+b*x1)/c)
    pb = np.repeat(t, q - 1)
    pc = np.tile(c, q)
    pic = np.tile(ic, q)
    rows = 1 + q + pb.astype(np.int64) * q + pc
    rows_per_chunk = max(1, _CHUNK_ELEMS // q)
    for lo in range(0, pb.size, rows_per_chunk):
        hi = min(lo + rows_per_chunk, pb.size)
        b_ch, ic_ch = pb[lo:hi], pic[lo:hi]
        y = field.neg_arr(field.add_arr(1, field.mul_arr(b_ch[:, None], t[None, :])))
        x2 = field.mul_arr(ic_ch[:, None], y)
        lines[rows[lo:hi], 1:] = base[None, :] + x2
        lines[rows[lo:hi], 0] = 1 + field.neg_arr(field.mul_arr(ic_ch, b_ch))

    # the index map is a self-correlation: point i is on line j iff j is on line i
    return PlaneModel(q, lines, lines, coords=_pg2_coords(field), field=field)


def enumerate_pg_points(field: FieldSpec, N: int, max_points: int = 1_000_000) -> list[ProjPoint]:
    """All normalized points of PG(N,q) in canonical lexicographic order."""
    if N < 1:
        raise ValueError(f"dimension must be >= 1, got {N}")
    q = field.q
    count = (q ** (N + 1) - 1) // (q - 1)
    if count > max_points:
        raise ResourceLimit(f"PG({N},{q}) has {count} points, cap is {max_points}")
    pts: list[ProjPoint] = []
    for lead in range(N, -1, -1):
        n_free = N - lead
        for code in range(q**n_free):
            tail = tuple((code // q**i) % q for i in range(n_free - 1, -1, -1))
            pts.append(ProjPoint((0,) * lead + (1,) + tail, len(pts)))
    return pts


# ---------------------------------------------------------------------------
# incidence file format: header "plane v b q", then b rows of q+1 indices,
# '#' starts a comment

def write_plane(plane: PlaneModel, path) -> None:
    with open(path, "w") as fh:
        dump_plane(plane, fh)


def dump_plane(plane: PlaneModel, fh) -> None:
    fh.write(f"plane {plane.v} {plane.b} {plane.q}\n")
    for row in plane.lines_pts:
        fh.write(" ".join(str(int(x)) for x in sorted(row)) + "\n")


def load_plane(source) -> PlaneModel:
    """Read and fully validate an incidence file; rejects non-planes."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source) as fh:
            text = fh.read()
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ParseError("empty incidence file")
    head = rows[0].split()
    if len(head) != 4 or head[0] != "plane":
        raise ParseError(f"bad header {rows[0]!r}, expected 'plane v b q'")
    try:
        v, b, q = (int(x) for x in head[1:])
    except ValueError as exc:
        raise ParseError(f"non-integer header field in {rows[0]!r}") from exc
    if len(rows) - 1 != b:
        raise ParseError(f"header declares {b} lines, file has {len(rows) - 1}")
    try:
        line_sets = [[int(x) for x in row.split()] for row in rows[1:]]
    except ValueError as exc:
        raise ParseError("non-integer point index") from exc
    return plane_from_lines(q, v, b, line_sets)


def plane_from_lines(q: int, v: int, b: int, line_sets) -> PlaneModel:
    if v != q * q + q + 1 or b != v:
        raise AxiomViolation("counts", f"need v = b = q^2+q+1 = {q*q+q+1}, got v={v} b={b}")
    k = q + 1
    for j, pts in enumerate(line_sets):
        if len(set(pts)) != len(pts):
            raise AxiomViolation("line-size", f"line {j} repeats a point")
        if len(pts) != k:
            raise AxiomViolation("line-size", f"line {j} has {len(pts)} points, expected {k}")
        if any(x < 0 or x >= v for x in pts):
            raise AxiomViolation("line-size", f"line {j} has an out-of-range point index")
    lines = np.sort(np.asarray(line_sets, dtype=np.int32), axis=1)

    deg = np.bincount(lines.ravel(), minlength=v)
    if not np.all(deg == k):
        bad = int(np.flatnonzero(deg != k)[0])
        raise AxiomViolation("point-degree", f"point {bad} lies on {int(deg[bad])} lines, expected {k}")

    n_pairs = b * (k * (k - 1) // 2)
    if n_pairs > (1 << 27):
        raise ResourceLimit(f"pair-uniqueness check needs {n_pairs} pair keys")
    ii, jj = np.triu_indices(k, 1)
    keys = lines[:, ii].astype(np.int64) * v + lines[:, jj]
    # with the counts above, b*C(k,2) == C(v,2), so distinct keys <=> each
    # point pair lies on exactly one line
    if np.unique(keys).size != n_pairs:
        raise AxiomViolation("pair-uniqueness", "two lines share two points")

    flat = lines.ravel()
    order = np.argsort(flat, kind="stable")
    pt_lines = (order // k).astype(np.int32).reshape(v, k)
    return PlaneModel(q, lines, pt_lines, coords=None, field=None, source="loaded-file")


def serialize_plane(plane: PlaneModel) -> str:
    buf = io.StringIO()
    dump_plane(plane, buf)
    return buf.getvalue()
