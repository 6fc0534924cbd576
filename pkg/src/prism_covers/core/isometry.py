"""Combinatorial isometries between covers of the same prism orbifold.

A map ``phi`` from the cells of cover A to the cells of cover B is an
isometry when ``phi o sigmaA(g) = sigmaB(g)^e o phi`` for every generator,
with ``e = +1`` (orientation preserving) or ``e = -1`` (reversing).
"""

from __future__ import annotations

from collections import deque
from collections.abc import Mapping

from prism_covers.models.common import GENERATORS, Generator, Orientation
from prism_covers.models.rep import Permutation, PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.errors import DegreeMismatch, SignatureMismatch
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)

GeneratorMap = Mapping[Generator, tuple[Generator, int]]


def find_isometries(
    sig_a: PrismSignature,
    rep_a: PermRep,
    sig_b: PrismSignature,
    rep_b: PermRep,
    orientation: Orientation = Orientation.PRESERVING,
) -> list[Permutation]:
    """All isometries A -> B, sorted by the image of cell 0.

    Each candidate image of cell 0 forces the whole map along the transitive
    action; a candidate survives if every generator edge is consistent.

    Raises:
        SignatureMismatch: If the covers are over different orbifolds
        DegreeMismatch: If the degrees differ
    """
    if sig_a.a != sig_b.a:
        raise SignatureMismatch(sig_a.display_name, sig_b.display_name)
    n = rep_a.degree
    if rep_b.degree != n:
        raise DegreeMismatch(n, rep_b.degree)

    exponent = 1 if orientation == Orientation.PRESERVING else -1
    a_images = [rep_a.gen(g).images for g in GENERATORS]
    b_images = [rep_b.gen(g).power(exponent).images for g in GENERATORS]

    found: list[Permutation] = []
    for candidate in range(n):
        phi = _propagate(candidate, a_images, b_images, n)
        if phi is not None:
            found.append(Permutation(images=tuple(phi)))
    logger.debug("Isometry search (%s, degree %d): %d found", orientation.value, n, len(found))
    return found


def _propagate(
    candidate: int,
    a_images: list[tuple[int, ...]],
    b_images: list[tuple[int, ...]],
    n: int,
) -> list[int] | None:
    phi = [-1] * n
    used = [False] * n
    phi[0] = candidate
    used[candidate] = True
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for a_img, b_img in zip(a_images, b_images, strict=True):
            src = a_img[i]
            dst = b_img[phi[i]]
            if phi[src] == -1:
                if used[dst]:
                    return None
                phi[src] = dst
                used[dst] = True
                queue.append(src)
            elif phi[src] != dst:
                return None
    if -1 in phi:
        return None
    return phi


def verify_intertwine(
    phi: Permutation,
    rep_a: PermRep,
    rep_b: PermRep,
    genmap: GeneratorMap,
) -> bool:
    """True iff ``phi o sigmaA(g) = sigmaB(g')^sign o phi`` for each ``g -> (g', sign)``."""
    if not (phi.degree == rep_a.degree == rep_b.degree):
        return False
    for g, (target, sign) in genmap.items():
        a_img = rep_a.gen(g).images
        b_img = rep_b.gen(target).power(sign).images
        if any(phi(a_img[i]) != b_img[phi(i)] for i in range(phi.degree)):
            return False
    return True


def identity_genmap(orientation: Orientation) -> dict[Generator, tuple[Generator, int]]:
    """Generator map matching :func:`find_isometries` for ``orientation``."""
    sign = 1 if orientation == Orientation.PRESERVING else -1
    return {g: (g, sign) for g in GENERATORS}


def parse_genmap(text: str) -> dict[Generator, tuple[Generator, int]]:
    """Parse ``"y=z+,z=y+,w=w+"`` into a generator map."""
    out: dict[Generator, tuple[Generator, int]] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        source, sep, target = item.partition("=")
        target = target.strip()
        if not sep or len(target) != 2 or target[1] not in "+-":
            raise ValueError(f"bad generator map entry {item!r}; expected e.g. 'y=z+'")
        out[Generator(source.strip())] = (Generator(target[0]), 1 if target[1] == "+" else -1)
    return out
