"""Independent re-checking of degeneration certificates.

Everything here works on raw per-vertex and per-arrow matrices and uses
nothing but :mod:`quiverdegen.linalg`, so a certificate accepted by these
functions does not depend on the search code that produced it.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from .linalg import ExactMatrix

Maps = Sequence[ExactMatrix]


class CertificateError(ValueError):
    """A certificate failed one of its invariants; the message names it."""


def _arrow_ends(quiver) -> List[Tuple[int, int]]:
    return [(quiver.index(a.src), quiver.index(a.tgt)) for a in quiver.arrows]


def check_intertwines(quiver, src_maps: Maps, tgt_maps: Maps, comps: Maps, label: str):
    for (s, t), a, ma, na in zip(_arrow_ends(quiver), quiver.arrows, src_maps, tgt_maps):
        if comps[t] @ ma != na @ comps[s]:
            raise CertificateError(f"{label} does not intertwine at arrow {a.name}")


def check_shapes(src_dims, tgt_dims, comps: Maps, label: str):
    if len(comps) != len(src_dims):
        raise CertificateError(f"{label} has {len(comps)} components, expected {len(src_dims)}")
    for v, (c, ds, dt) in enumerate(zip(comps, src_dims, tgt_dims)):
        if c.shape != (dt, ds):
            raise CertificateError(f"{label} component {v} has shape {c.shape}, expected {(dt, ds)}")


def block_diag_maps(quiver, field, parts: Sequence[Tuple[Sequence[int], Maps]]):
    """Dimensions and arrow matrices of a direct sum, rebuilt from scratch."""
    dims = tuple(sum(p[0][v] for p in parts) for v in range(len(quiver.vertices)))
    maps = [ExactMatrix.block_diag(field, [p[1][i] for p in parts]) for i in range(len(quiver.arrows))]
    return dims, maps


def check_nilpotent(comps: Maps, label: str):
    """Strict nilpotence of an endomorphism given per vertex (power = total dim)."""
    for v, c in enumerate(comps):
        if c.nrows and not (c ** c.nrows).is_zero():
            raise CertificateError(f"{label} is not nilpotent at vertex {v}")


def verify_rz(quiver, field, m_dims, m_maps, n_dims, n_maps, z_dims, z_maps,
              v: Maps, u: Maps, proj: Maps) -> None:
    """Check that ``0 -> Z -(v,u)-> Z+M -proj-> N -> 0`` is exact with ``v`` nilpotent.

    Raises :class:`CertificateError` naming the first violated invariant.
    """
    if tuple(m_dims) != tuple(n_dims):
        raise CertificateError("dimension vector mismatch between m and n")
    check_shapes(z_dims, z_dims, v, "v")
    check_shapes(z_dims, m_dims, u, "u")
    check_intertwines(quiver, z_maps, z_maps, v, "v")
    check_intertwines(quiver, z_maps, m_maps, u, "u")
    check_nilpotent(v, "v")
    zm_dims, zm_maps = block_diag_maps(quiver, field, [(z_dims, z_maps), (m_dims, m_maps)])
    emb = [vv.vstack(uu) for vv, uu in zip(v, u)]
    check_shapes(zm_dims, n_dims, proj, "projection")
    check_intertwines(quiver, zm_maps, n_maps, proj, "projection")
    for i, (e, p) in enumerate(zip(emb, proj)):
        if e.rank() != e.ncols:
            raise CertificateError(f"embedding is not injective at vertex {i}")
        if p.rank() != p.nrows:
            raise CertificateError(f"projection is not surjective at vertex {i}")
        if not (p @ e).is_zero():
            raise CertificateError(f"projection does not kill the embedding at vertex {i}")
    # ranks now force ker(proj) = im(embedding) at every vertex
