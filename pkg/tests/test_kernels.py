from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from bibcollab import _kernels_py, kernels

cython_kernels = pytest.importorskip(
    "bibcollab._kernels", reason="compiled kernel extension not built"
)


def random_csr(seed, n_records=400, vocab_size=12):
    """Random CSR corpus layout plus years, mirroring columnar packing."""
    rng = np.random.default_rng(seed)
    offsets = np.zeros(n_records + 1, dtype=np.int64)
    ids = []
    for i in range(n_records):
        k = int(rng.integers(1, 6))
        members = rng.choice(vocab_size, size=min(k, vocab_size), replace=False)
        members.sort()
        ids.extend(int(m) for m in members)
        offsets[i + 1] = len(ids)
    country_ids = np.asarray(ids, dtype=np.int32)
    years = rng.integers(1995, 2006, size=n_records).astype(np.int32)
    return offsets, country_ids, years


def random_system_map(seed, vocab_size=12, n_system=5):
    rng = np.random.default_rng(seed + 1000)
    system_map = np.full(vocab_size, -1, dtype=np.int32)
    chosen = rng.choice(vocab_size, size=n_system, replace=False)
    for idx, vocab_id in enumerate(chosen):
        system_map[vocab_id] = idx
    return system_map


class TestBackendParity:
    @pytest.mark.parametrize("seed", range(8))
    def test_classify_labels_bit_identical(self, seed):
        offsets, country_ids, _ = random_csr(seed)
        for focal_id, partner_id in [(0, 1), (3, 7), (-1, 2), (5, -1)]:
            a = _kernels_py.classify_labels(offsets, country_ids, focal_id, partner_id)
            b = cython_kernels.classify_labels(offsets, country_ids, focal_id, partner_id)
            assert a.dtype == b.dtype == np.uint8
            assert np.array_equal(a, b)

    @pytest.mark.parametrize("seed", range(8))
    def test_pair_matrix_bit_identical(self, seed):
        offsets, country_ids, _ = random_csr(seed)
        system_map = random_system_map(seed)
        a = _kernels_py.pair_matrix(offsets, country_ids, system_map, 5)
        b = cython_kernels.pair_matrix(offsets, country_ids, system_map, 5)
        assert a.dtype == b.dtype == np.int64
        assert np.array_equal(a, b)

    @pytest.mark.parametrize("seed", range(8))
    def test_pair_matrix_by_year_bit_identical(self, seed):
        offsets, country_ids, years = random_csr(seed)
        system_map = random_system_map(seed)
        a = _kernels_py.pair_matrix_by_year(offsets, country_ids, years, 1995, 11, system_map, 5)
        b = cython_kernels.pair_matrix_by_year(offsets, country_ids, years, 1995, 11, system_map, 5)
        assert np.array_equal(a, b)

    def test_label_codes_agree(self):
        for name in ("INDIGENOUS", "BILATERAL", "OTHER", "FOCAL_ABSENT"):
            assert getattr(_kernels_py, name) == getattr(cython_kernels, name)

    def test_backend_names_differ(self):
        assert _kernels_py.BACKEND == "python"
        assert cython_kernels.BACKEND == "cython"


class TestAgainstBruteForce:
    @pytest.mark.parametrize("backend", [_kernels_py, cython_kernels], ids=["python", "cython"])
    def test_classify(self, backend):
        offsets, country_ids, _ = random_csr(99)
        focal_id, partner_id = 2, 6
        labels = backend.classify_labels(offsets, country_ids, focal_id, partner_id)
        for i in range(len(offsets) - 1):
            members = set(country_ids[offsets[i] : offsets[i + 1]].tolist())
            if focal_id not in members:
                expected = backend.FOCAL_ABSENT
            elif len(members) == 1:
                expected = backend.INDIGENOUS
            elif partner_id in members:
                expected = backend.BILATERAL
            else:
                expected = backend.OTHER
            assert labels[i] == expected

    @pytest.mark.parametrize("backend", [_kernels_py, cython_kernels], ids=["python", "cython"])
    def test_pair_matrix(self, backend):
        offsets, country_ids, _ = random_csr(98)
        system_map = random_system_map(98)
        counts = backend.pair_matrix(offsets, country_ids, system_map, 5)
        expected = np.zeros((5, 5), dtype=np.int64)
        for i in range(len(offsets) - 1):
            members = sorted(
                int(system_map[c]) for c in country_ids[offsets[i] : offsets[i + 1]] if system_map[c] >= 0
            )
            for a_idx in range(len(members)):
                for b_idx in range(a_idx + 1, len(members)):
                    expected[members[a_idx], members[b_idx]] += 1
                    expected[members[b_idx], members[a_idx]] += 1
        assert np.array_equal(counts, expected)
        assert np.array_equal(counts, counts.T)
        assert not counts.diagonal().any()

    @pytest.mark.parametrize("backend", [_kernels_py, cython_kernels], ids=["python", "cython"])
    def test_by_year_slices_sum_to_total(self, backend):
        offsets, country_ids, years = random_csr(97)
        system_map = random_system_map(97)
        per_year = backend.pair_matrix_by_year(offsets, country_ids, years, 1995, 11, system_map, 5)
        total = backend.pair_matrix(offsets, country_ids, system_map, 5)
        assert np.array_equal(per_year.sum(axis=0), total)

    @pytest.mark.parametrize("backend", [_kernels_py, cython_kernels], ids=["python", "cython"])
    def test_by_year_window_skips_outside_records(self, backend):
        offsets, country_ids, years = random_csr(96)
        system_map = random_system_map(96)
        narrow = backend.pair_matrix_by_year(offsets, country_ids, years, 2000, 1, system_map, 5)
        inside = years == 2000
        kept_offsets = np.zeros(int(inside.sum()) + 1, dtype=np.int64)
        kept_ids = []
        pos = 0
        for i in np.flatnonzero(inside):
            row = country_ids[offsets[i] : offsets[i + 1]]
            kept_ids.extend(row.tolist())
            pos += 1
            kept_offsets[pos] = len(kept_ids)
        only_inside = backend.pair_matrix(
            kept_offsets, np.asarray(kept_ids, dtype=np.int32), system_map, 5
        )
        assert np.array_equal(narrow[0], only_inside)


class TestFacade:
    def test_active_backend_matches_environment(self):
        if os.environ.get("BIBCOLLAB_NO_EXT"):
            assert kernels.BACKEND == "python"
        else:
            assert kernels.BACKEND == "cython"

    def test_env_override_forces_python(self):
        code = "from bibcollab import kernels; print(kernels.BACKEND)"
        out = subprocess.run(
            [sys.executable, "-c", code],
            env={**os.environ, "BIBCOLLAB_NO_EXT": "1"},
            capture_output=True,
            text=True,
            check=True,
        )
        assert out.stdout.strip() == "python"
