"""First homology of a presentation by Smith normal form over the integers."""

from __future__ import annotations

import numpy as np

from prism_covers.models.complex import AbelianGroup, Presentation
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)


def relation_matrix(p: Presentation) -> np.ndarray:
    """Abelianized relators, one row per relator, as an object-dtype integer matrix."""
    matrix = np.zeros((len(p.relators), p.generator_count), dtype=object)
    for row, word in enumerate(p.relators):
        for letter in word:
            matrix[row, abs(letter) - 1] += 1 if letter > 0 else -1
    return matrix


def smith_normal_form(matrix: np.ndarray) -> list[int]:
    """Nonzero diagonal entries d1 | d2 | ... of the Smith normal form.

    Entries are Python ints (``dtype=object``), so there is no overflow. Each
    step pivots on the smallest nonzero absolute value of the remaining block.
    """
    a = np.array(matrix, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    rows, cols = a.shape
    diagonal: list[int] = []
    top = 0
    while top < min(rows, cols):
        block = a[top:, top:]
        nonzero = [(abs(int(block[i, j])), i, j) for i, j in zip(*np.nonzero(block), strict=True)]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[[top, top + pi]] = a[[top + pi, top]]
        a[:, [top, top + pj]] = a[:, [top + pj, top]]

        while True:
            pivot = a[top, top]
            done = True
            for i in range(top + 1, rows):
                q = a[i, top] // pivot
                if q:
                    a[i, :] -= q * a[top, :]
                if a[i, top]:
                    done = False
            for j in range(top + 1, cols):
                q = a[top, j] // pivot
                if q:
                    a[:, j] -= q * a[:, top]
                if a[top, j]:
                    done = False
            if not done:
                # A smaller remainder appeared; move it to the pivot position.
                candidates = [(abs(int(a[i, top])), i, top) for i in range(top + 1, rows) if a[i, top]]
                candidates += [(abs(int(a[top, j])), top, j) for j in range(top + 1, cols) if a[top, j]]
                _, i, j = min(candidates)
                if j == top:
                    a[[top, i]] = a[[i, top]]
                else:
                    a[:, [top, j]] = a[:, [j, top]]
                continue

            pivot = a[top, top]
            bad = next(
                (
                    (i, j)
                    for i in range(top + 1, rows)
                    for j in range(top + 1, cols)
                    if a[i, j] % pivot
                ),
                None,
            )
            if bad is None:
                break
            a[top, :] += a[bad[0], :]

        diagonal.append(abs(int(a[top, top])))
        top += 1
    return diagonal


def first_homology(p: Presentation) -> AbelianGroup:
    """Abelian invariants of the group presented by ``p``."""
    if p.generator_count == 0:
        return AbelianGroup(rank=0)
    if not p.relators:
        return AbelianGroup(rank=p.generator_count)
    diagonal = smith_normal_form(relation_matrix(p))
    rank = p.generator_count - len(diagonal)
    torsion = tuple(d for d in diagonal if d > 1)
    logger.debug("Smith normal form: rank %d, torsion %s", rank, torsion)
    return AbelianGroup(rank=rank, torsion=torsion)
