"""Word evaluation and the combinatorial criteria for permutation representations.

Representations are right actions: a word ``g1 g2 ... gk`` acts by applying
``sigma(g1)`` first, so ``sigma(g h) = sigma(h) o sigma(g)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from pathlib import Path

from prism_covers.core.template import PAIRING_AXIS, TWO_FACE_EDGES
from prism_covers.models.common import GENERATORS, CoverError, Generator
from prism_covers.models.rep import (
    CycleReport,
    GroupWord,
    ManifoldReport,
    Permutation,
    PermRep,
    Relator,
    RelatorFailure,
    RepValidation,
)
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.errors import (
    DegreeNotDivisible,
    NotTransitive,
    RelatorViolation,
    RepFormatError,
)
from prism_covers.utils.logging import get_logger

logger = get_logger(__name__)

# Order of the two-generator relators in the presentation.
_TWO_GENERATOR_ORDER: tuple[int, ...] = (3, 2, 6, 9, 8)


def relators(sig: PrismSignature) -> list[Relator]:
    """The nine relators of the rotation group, in presentation order.

    ``x^a1, y^a4, z^a5, w^a7, (y^-1 x)^a3, (z^-1 x)^a2, (z^-1 y)^a6,
    (y^-1 w)^a9, (z^-1 w)^a8``.
    """
    out: list[Relator] = []
    for g in GENERATORS:
        edge = PAIRING_AXIS[g]
        out.append(Relator(base=GroupWord.of((g, 1)), exponent=sig.label(edge), edge=edge))
    for edge in _TWO_GENERATOR_ORDER:
        inverted, plain = TWO_FACE_EDGES[edge]
        base = GroupWord.of((inverted, -1), (plain, 1))
        out.append(Relator(base=base, exponent=sig.label(edge), edge=edge))
    return out


def evaluate_word(rep: PermRep, word: GroupWord) -> Permutation:
    """Image of ``word`` under the right action; the empty word gives the identity."""
    images = list(range(rep.degree))
    for g, exponent in word.letters:
        step = rep.gen(g).power(exponent).images
        images = [step[i] for i in images]
    return Permutation(images=tuple(images))


def relator_permutation(rep: PermRep, relator: Relator) -> Permutation:
    return evaluate_word(rep, relator.base).power(relator.exponent)


def orbits(perms: Iterable[Permutation], degree: int) -> list[list[int]]:
    """Orbits of the group generated by ``perms``, sorted by smallest point."""
    gens = [p.images for p in perms]
    seen = [False] * degree
    out: list[list[int]] = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for images in gens:
                j = images[i]
                if not seen[j]:
                    seen[j] = True
                    orbit.append(j)
                    stack.append(j)
        out.append(sorted(orbit))
    return out


def is_transitive(rep: PermRep) -> bool:
    return len(orbits((rep.gen(g) for g in GENERATORS), rep.degree)) == 1


def validate_rep(sig: PrismSignature, rep: PermRep) -> RepValidation:
    """Check every relator and transitivity.

    Failures are reported, not raised; ``errors`` holds RelatorViolation and
    NotTransitive entries.
    """
    failures: list[RelatorFailure] = []
    errors: list[CoverError] = []
    for relator in relators(sig):
        perm = relator_permutation(rep, relator)
        moved = [i for i in range(rep.degree) if perm(i) != i]
        if moved:
            failures.append(RelatorFailure(relator=relator.name, point=moved[0]))
            errors.append(RelatorViolation(relator.name, moved[0]).to_cover_error())

    orbit_count = len(orbits((rep.gen(g) for g in GENERATORS), rep.degree))
    if orbit_count != 1:
        errors.append(NotTransitive(orbit_count).to_cover_error())

    return RepValidation(
        valid=not errors,
        degree=rep.degree,
        orbit_count=orbit_count,
        failures=failures,
        errors=errors,
    )


def is_manifold(sig: PrismSignature, rep: PermRep) -> ManifoldReport:
    """Manifold test: each relator base splits into n/a cycles of length a.

    A degree not divisible by some exponent makes the cover an orbifold at
    once; that is reported as a DegreeNotDivisible error.
    """
    n = rep.degree
    cycles: list[CycleReport] = []
    errors: list[CoverError] = []
    for relator in relators(sig):
        a = relator.exponent
        base = evaluate_word(rep, relator.base)
        cycle_type = base.cycle_type()
        ok = n % a == 0 and cycle_type == [a] * (n // a)
        if n % a != 0:
            errors.append(DegreeNotDivisible(relator.name, n, a).to_cover_error())
        cycles.append(CycleReport(relator=relator.name, exponent=a, cycle_type=cycle_type, ok=ok))
    manifold = all(c.ok for c in cycles)
    logger.debug("Manifold test for degree %d: %s", n, manifold)
    return ManifoldReport(manifold=manifold, cycles=cycles, errors=errors)


def cusp_orbits(rep: PermRep) -> list[list[int]]:
    """Orbits of <sigma(x), sigma(z)>; one per cusp of the cover."""
    return orbits((rep.x, rep.z), rep.degree)


def canonical_form(rep: PermRep) -> tuple[tuple[int, ...], ...]:
    """Least standardized coset table over all base points.

    Rows are cosets, columns are x, X, y, Y, z, Z, w, W. Two transitive reps
    are simultaneously conjugate iff their canonical forms agree.
    """
    columns: list[tuple[int, ...]] = []
    for g in GENERATORS:
        perm = rep.gen(g)
        columns.append(perm.images)
        columns.append(perm.inverse().images)
    return min(_standardize(columns, base) for base in range(rep.degree))


def _standardize(columns: Sequence[Sequence[int]], base: int) -> tuple[tuple[int, ...], ...]:
    """Coset table renumbered by first appearance from ``base``."""
    new_of = {base: 0}
    order = [base]
    rows: list[tuple[int, ...]] = []
    pos = 0
    while pos < len(order):
        old = order[pos]
        row: list[int] = []
        for col in columns:
            target = col[old]
            if target not in new_of:
                new_of[target] = len(order)
                order.append(target)
            row.append(new_of[target])
        rows.append(tuple(row))
        pos += 1
    return tuple(rows)


def rep_from_table(table: Sequence[Sequence[int]]) -> PermRep:
    """PermRep from a complete coset table with columns x, X, y, Y, z, Z, w, W."""
    return PermRep.from_images({g: [row[2 * i] for row in table] for i, g in enumerate(GENERATORS)})


def format_rep(rep: PermRep) -> str:
    """Rep as four ``g: i0 i1 ...`` lines."""
    return "\n".join(f"{g.value}: " + " ".join(str(i) for i in rep.gen(g).images) for g in GENERATORS)


def parse_reps(text: str) -> list[PermRep]:
    """Parse rep records separated by blank lines.

    Raises:
        RepFormatError: On malformed records, with the offending line number
    """
    reps: list[PermRep] = []
    record: dict[Generator, list[int]] = {}
    start_line = 0

    def flush(line_no: int) -> None:
        if not record:
            return
        missing = [g.value for g in GENERATORS if g not in record]
        if missing:
            raise RepFormatError(f"record missing generators {missing}", line=start_line)
        try:
            reps.append(PermRep.from_images(dict(record)))
        except ValueError as e:
            raise RepFormatError(f"invalid record: {e}", line=line_no) from e
        record.clear()

    lines = text.splitlines()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush(line_no)
            continue
        key, sep, body = line.partition(":")
        key = key.strip()
        if not sep or key not in {g.value for g in GENERATORS}:
            raise RepFormatError(f"expected 'x:', 'y:', 'z:' or 'w:' but got {raw!r}", line=line_no)
        g = Generator(key)
        if g in record:
            raise RepFormatError(f"generator {key} given twice in one record", line=line_no)
        if not record:
            start_line = line_no
        try:
            record[g] = [int(v) for v in body.split()]
        except ValueError as e:
            raise RepFormatError(f"non-integer image in {raw!r}", line=line_no) from e
    flush(len(lines))
    return reps


def read_reps(path: Path | str) -> list[PermRep]:
    return parse_reps(Path(path).read_text())


def write_reps(reps: Iterable[PermRep], path: Path | str, append: bool = False) -> int:
    """Write reps in the rep file format; returns the number written."""
    count = 0
    with open(path, "a" if append else "w") as fh:
        for rep in reps:
            fh.write(format_rep(rep) + "\n\n")
            count += 1
    return count
