"""Independent oracles: brute-force admissibility and random sampling of spectra."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .linalg import clear_denominators, nullspace, rank
from .repmodel import Representation
from .weightsys import CartanElement, weight_functional

BRUTE_LIMIT = 16


class OracleSizeError(ValueError):
    pass


def _cartan_constraints(group):
    """Trace-zero rows for the SU factors in flat Cartan coordinates."""
    rows = []
    pos = 0
    n = group.cartan_length
    for kind, d in group.factors:
        if kind == "SU":
            row = [0] * n
            for i in range(pos, pos + d):
                row[i] = 1
            rows.append(tuple(row))
        pos += d
    return rows


def _flat_weight(w):
    return tuple(x for p in w.parts for x in p) + tuple(w.charges)


def brute_admissible(rep: Representation, limit: int = BRUTE_LIMIT) -> set[CartanElement]:
    """Every admissible direction, found by scanning independent weight subsets.

    A hyperplane spanned by weights is spanned by ``r_K - 1`` independent
    ones, so it suffices to look at subsets of exactly that size.  Both
    orientations are returned.
    """
    if len(rep.labels) > limit:
        raise OracleSizeError(f"{len(rep.labels)} weights exceed the brute-force limit {limit}")
    group = rep.group
    target = group.rank - 1
    functionals = {v: weight_functional(group, rep.weights[v]) for v in rep.labels}
    flats = {v: _flat_weight(rep.weights[v]) for v in rep.labels}
    distinct = sorted(set(rep.labels), key=lambda v: flats[v])
    base = _cartan_constraints(group)
    found: set[tuple[int, ...]] = set()
    for subset in combinations(distinct, target):
        if rank([functionals[v] for v in subset]) != target:
            continue
        kernel = nullspace(base + [flats[v] for v in subset], group.cartan_length)
        if len(kernel) != 1:
            continue
        h = clear_denominators(kernel[0])
        found.add(h)
        found.add(tuple(-x for x in h))
    return {CartanElement.from_flat(group, h) for h in found}


def dominant_representative(h: CartanElement) -> CartanElement:
    return CartanElement(h.group, tuple(tuple(sorted(p, reverse=True)) for p in h.parts), h.scalars)


# -- eigenvalues ------------------------------------------------------------------


def jacobi_eigh(mats, tol: float = 1e-15, max_sweeps: int = 30):
    """Cyclic Jacobi diagonalization of a batch of Hermitian matrices.

    ``mats`` has shape ``(n, d, d)`` (a single matrix is also accepted).
    Returns eigenvalues sorted non-increasingly and the matching unitary
    eigenvector matrices (columns).
    """
    a = np.array(mats, dtype=complex)
    single = a.ndim == 2
    if single:
        a = a[None]
    n, d, _ = a.shape
    v = np.broadcast_to(np.eye(d, dtype=complex), (n, d, d)).copy()
    scale = np.maximum(np.linalg.norm(a, axis=(1, 2)), 1e-300)
    for _ in range(max_sweeps):
        total = np.sum(np.abs(a) ** 2, axis=(1, 2))
        diag = np.sum(np.abs(np.diagonal(a, axis1=1, axis2=2)) ** 2, axis=1)
        off = np.sqrt(np.maximum(total - diag, 0.0))
        if np.all(off <= tol * scale):
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                beta = a[:, p, q]
                mag = np.abs(beta)
                live = mag > 1e-300 * scale
                safe = np.where(live, mag, 1.0)
                phase = np.where(live, beta / safe, 1.0)
                mag = np.where(live, mag, 0.0)
                theta = 0.5 * np.arctan2(2 * mag, (a[:, q, q] - a[:, p, p]).real)
                c, s = np.cos(theta), np.sin(theta)
                # U acts on coordinates p, q: U = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                u_pp, u_pq = c, s
                u_qp, u_qq = -s * np.conj(phase), c * np.conj(phase)
                cp, cq = a[:, :, p].copy(), a[:, :, q].copy()
                a[:, :, p] = cp * u_pp[:, None] + cq * u_qp[:, None]
                a[:, :, q] = cp * u_pq[:, None] + cq * u_qq[:, None]
                rp, rq = a[:, p, :].copy(), a[:, q, :].copy()
                a[:, p, :] = np.conj(u_pp)[:, None] * rp + np.conj(u_qp)[:, None] * rq
                a[:, q, :] = np.conj(u_pq)[:, None] * rp + np.conj(u_qq)[:, None] * rq
                vp, vq = v[:, :, p].copy(), v[:, :, q].copy()
                v[:, :, p] = vp * u_pp[:, None] + vq * u_qp[:, None]
                v[:, :, q] = vp * u_pq[:, None] + vq * u_qq[:, None]
    w = np.diagonal(a, axis1=1, axis2=2).real
    order = np.argsort(-w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    v = np.take_along_axis(v, order[:, None, :], axis=2)
    if single:
        return w[0], v[0]
    return w, v


# -- sampling ---------------------------------------------------------------------


@dataclass
class SpectraSample:
    spectra: tuple[tuple[float, ...], ...]

    @property
    def flat(self) -> tuple[float, ...]:
        return tuple(x for s in self.spectra for x in s)


def reduced_density_matrices(psi: np.ndarray):
    """Marginals of a batch of states of shape ``(n, a, b, c)``."""
    rho_a = np.einsum("nijk,nljk->nil", psi, psi.conj())
    rho_b = np.einsum("nijk,nilk->njl", psi, psi.conj())
    rho_c = np.einsum("nijk,nijl->nkl", psi, psi.conj())
    return rho_a, rho_b, rho_c


def random_states(a: int, b: int, c: int, n: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal((n, a, b, c)) + 1j * rng.standard_normal((n, a, b, c))
    norms = np.sqrt(np.sum(np.abs(psi) ** 2, axis=(1, 2, 3)))
    return psi / norms[:, None, None, None]


def sample_spectra_array(a: int, b: int, c: int, n: int, seed: int = 0) -> np.ndarray:
    """Array of shape ``(n, a + b + c)`` with the three sorted marginal spectra per row."""
    if n < 1:
        raise ValueError("n must be positive")
    psi = random_states(a, b, c, n, seed)
    parts = [jacobi_eigh(rho)[0] for rho in reduced_density_matrices(psi)]
    return np.concatenate(parts, axis=1)


def sample_spectra(a: int, b: int, c: int, n: int, seed: int = 0) -> list[SpectraSample]:
    arr = sample_spectra_array(a, b, c, n, seed)
    cuts = [0, a, a + b, a + b + c]
    return [SpectraSample(tuple(tuple(float(x) for x in row[cuts[k]:cuts[k + 1]]) for k in range(3)))
            for row in arr]


def facet_violations(samples: np.ndarray, normals, tol: float = 1e-9) -> int:
    """Number of (sample, normal) pairs with ``normal . sample < -tol``."""
    m = np.array(normals, dtype=float)
    vals = samples @ m.T
    return int(np.sum(vals < -tol))


# -- Horn triples ------------------------------------------------------------------


@dataclass
class HermitianSearch:
    found: bool
    residual: float
    matrices: tuple | None = None

    @property
    def verdict(self) -> str:
        return "found" if self.found else "not-found (inconclusive)"


def _orbit_projection(m: np.ndarray, spec: np.ndarray) -> np.ndarray:
    """Closest matrix to ``m`` with spectrum ``spec`` (sorted non-increasingly)."""
    _, vecs = jacobi_eigh(m)
    return vecs @ np.diag(spec) @ vecs.conj().T


def _random_unitary(rng, d):
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_hermitian_triple(d: int, spectra, iters: int = 2000, seed: int = 0, restarts: int = 5,
                            tol: float = 1e-8) -> HermitianSearch:
    """Look for Hermitian A, B, C with the given spectra and A + B + C = 0.

    Alternating projections onto the three unitary orbits.  Success
    certifies membership up to ``tol``; failure proves nothing.
    """
    x, y, z = (np.array(sorted((float(v) for v in s), reverse=True)) for s in spectra)
    if not (len(x) == len(y) == len(z) == d):
        raise ValueError("spectra must have length d")
    rng = np.random.default_rng(seed)
    best = np.inf
    scale = max(1.0, float(np.max(np.abs(np.concatenate([x, y, z])))))
    for _ in range(restarts):
        mats = []
        for s in (x, y, z):
            u = _random_unitary(rng, d)
            mats.append(u @ np.diag(s) @ u.conj().T)
        a, b, c = mats
        for _ in range(iters):
            a = _orbit_projection(-(b + c), x)
            b = _orbit_projection(-(a + c), y)
            c = _orbit_projection(-(a + b), z)
            res = float(np.linalg.norm(a + b + c)) / scale
            if res < tol:
                return HermitianSearch(True, res, (a, b, c))
        best = min(best, res)
    return HermitianSearch(False, best)
