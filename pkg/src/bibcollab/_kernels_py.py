"""Pure-Python counting kernels.

Reference implementations of the loops in ``_kernels.pyx``, used when the
compiled extension is unavailable. All arithmetic is integer, so both
backends return bit-identical arrays.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

# label codes shared with the compiled kernel
INDIGENOUS = 0
BILATERAL = 1
OTHER = 2
FOCAL_ABSENT = 255


def classify_labels(
    offsets: np.ndarray,
    country_ids: np.ndarray,
    focal_id: int,
    partner_id: int,
) -> np.ndarray:
    """Label every CSR-packed record relative to (focal, partner) ids.

    ``focal_id`` / ``partner_id`` of -1 mean the country never occurs in
    the corpus vocabulary.
    """
    n = len(offsets) - 1
    labels = np.empty(n, dtype=np.uint8)
    ids = country_ids
    for i in range(n):
        start = offsets[i]
        stop = offsets[i + 1]
        has_focal = False
        has_partner = False
        for j in range(start, stop):
            cid = ids[j]
            if cid == focal_id:
                has_focal = True
            elif cid == partner_id:
                has_partner = True
        if not has_focal:
            labels[i] = FOCAL_ABSENT
        elif stop - start == 1:
            labels[i] = INDIGENOUS
        elif has_partner:
            labels[i] = BILATERAL
        else:
            labels[i] = OTHER
    return labels


def pair_matrix(
    offsets: np.ndarray,
    country_ids: np.ndarray,
    system_map: np.ndarray,
    n_system: int,
) -> np.ndarray:
    """Symmetric pair-count matrix over a country system.

    ``system_map`` maps vocabulary ids to system indices (-1 = outside the
    system). A record with k in-system countries increments all k·(k-1)/2
    unordered cells once; the diagonal stays zero.
    """
    counts = np.zeros((n_system, n_system), dtype=np.int64)
    members: list[int] = []
    for i in range(len(offsets) - 1):
        members.clear()
        for j in range(offsets[i], offsets[i + 1]):
            sid = system_map[country_ids[j]]
            if sid >= 0:
                members.append(sid)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                x = members[a]
                y = members[b]
                counts[x, y] += 1
                counts[y, x] += 1
    return counts


def pair_matrix_by_year(
    offsets: np.ndarray,
    country_ids: np.ndarray,
    years: np.ndarray,
    year_min: int,
    n_years: int,
    system_map: np.ndarray,
    n_system: int,
) -> np.ndarray:
    """Per-year pair-count matrices; records outside the window are skipped."""
    counts = np.zeros((n_years, n_system, n_system), dtype=np.int64)
    members: list[int] = []
    for i in range(len(offsets) - 1):
        t = years[i] - year_min
        if t < 0 or t >= n_years:
            continue
        members.clear()
        for j in range(offsets[i], offsets[i + 1]):
            sid = system_map[country_ids[j]]
            if sid >= 0:
                members.append(sid)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                x = members[a]
                y = members[b]
                counts[t, x, y] += 1
                counts[t, y, x] += 1
    return counts
