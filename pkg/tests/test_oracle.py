import numpy as np
import pytest

from momentcone.candidates import candidate_pipeline
from momentcone.oracle import (
    OracleSizeError, brute_admissible, dominant_representative, facet_violations, jacobi_eigh,
    random_hermitian_triple, sample_spectra, sample_spectra_array,
)
from momentcone.repmodel import kronecker_rep
from momentcone.weightsys import CartanElement, kronecker_group


def random_hermitian(rng, n, d):
    z = rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))
    return (z + np.conj(np.transpose(z, (0, 2, 1)))) / 2


@pytest.mark.parametrize("d", [1, 2, 3, 4, 6])
def test_jacobi_reconstruction(d):
    rng = np.random.default_rng(d)
    mats = random_hermitian(rng, 50, d)
    w, v = jacobi_eigh(mats)
    rebuilt = v @ (w[:, :, None] * np.conj(np.transpose(v, (0, 2, 1))))
    assert np.max(np.abs(rebuilt - mats)) < 1e-12
    assert np.all(np.diff(w, axis=1) <= 1e-14)
    eye = np.conj(np.transpose(v, (0, 2, 1))) @ v
    assert np.max(np.abs(eye - np.eye(d))) < 1e-12


def test_jacobi_on_diagonal_and_degenerate_input():
    w, _ = jacobi_eigh(np.diag([0.0, 3.0, 3.0]))
    assert np.allclose(w, [3, 3, 0])
    w, _ = jacobi_eigh(np.zeros((2, 2)))
    assert np.allclose(w, 0)


def dominant_forms(elements):
    return {dominant_representative(h) for h in elements}


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 2, 3), (2, 2, 4)])
def test_brute_force_matches_pipeline(dims):
    rep = kronecker_rep(*dims)
    brute = dominant_forms(brute_admissible(rep))
    pipe = set(candidate_pipeline(*dims).admissible.elements)
    assert brute == pipe


def test_brute_force_contains_polygonal_elements():
    g = kronecker_group(2, 2, 2)
    found = brute_admissible(kronecker_rep(2, 2, 2))
    assert CartanElement(g, ((1, -1), (1, -1), (1, -1)), (1,)) in found
    assert CartanElement(g, ((1, -1), (1, -1), (1, -1)), (-1,)) in found
    assert CartanElement(g, ((-1, 1), (-1, 1), (1, -1)), (1,)) in found


def test_brute_force_size_guard():
    with pytest.raises(OracleSizeError):
        brute_admissible(kronecker_rep(2, 3, 3))


def test_trivial_sampling():
    for s in sample_spectra(1, 1, 1, 5):
        assert s.spectra == ((1.0,), (1.0,), (1.0,)) or np.allclose(s.flat, 1)


def test_sampling_is_deterministic_and_normalized():
    a = sample_spectra_array(2, 3, 4, 100, seed=7)
    b = sample_spectra_array(2, 3, 4, 100, seed=7)
    assert np.array_equal(a, b)
    assert np.allclose(a[:, :2].sum(axis=1), 1) and np.allclose(a[:, 5:].sum(axis=1), 1)
    # With a trivial third factor the state is bipartite and A, B share their nonzero spectrum.
    c = sample_spectra_array(2, 3, 1, 100, seed=7)
    assert np.allclose(c[:, :2], c[:, 2:4], atol=1e-10)
    assert np.all(np.abs(c[:, 4]) < 1e-10)


def test_sampled_points_satisfy_small_facets(cone_222):
    arr = sample_spectra_array(2, 2, 2, 2000, seed=3)
    normals = [f.normal for f in cone_222.facets]
    assert facet_violations(arr, normals) == 0


def test_swapped_samples_also_satisfy_facets(cone_333):
    arr = sample_spectra_array(3, 3, 3, 1000, seed=5)
    swapped = np.concatenate([arr[:, 3:6], arr[:, 0:3], arr[:, 6:9]], axis=1)
    normals = [f.normal for f in cone_333.facets]
    assert facet_violations(arr, normals) == facet_violations(swapped, normals) == 0


def test_hermitian_search():
    assert random_hermitian_triple(2, [(1, 0), (1, 0), (-1, -1)]).found
    assert random_hermitian_triple(2, [(0, 0), (0, 0), (0, 0)]).found
    res = random_hermitian_triple(2, [(2, 0), (0, 0), (-1, -1)], iters=300, restarts=2)
    assert not res.found and res.verdict.startswith("not-found")
