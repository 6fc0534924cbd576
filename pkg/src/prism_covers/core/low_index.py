"""Low-index subgroup enumeration by backtracking over partial coset tables.

Columns of a coset table are the letters x, X, y, Y, z, Z, w, W (capitals
are inverses); letter ``l`` has inverse ``l ^ 1``. The search fills the first
undefined entry in row-major order, traces relators to deduce entries, and
keeps a table only if no other base point renumbers it to a smaller one.
Complete tables are therefore in the form returned by
:func:`prism_covers.core.permutation.canonical_form`.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from pathlib import Path

from prism_covers.core.permutation import (
    canonical_form,
    is_transitive,
    relators,
    rep_from_table,
    write_reps,
)
from prism_covers.core.template import PAIRING_AXIS
from prism_covers.models.common import GENERATORS, Generator
from prism_covers.models.enumeration import EnumerationSummary, EnumerationTask
from prism_covers.models.rep import PermRep
from prism_covers.models.signature import PrismSignature
from prism_covers.utils.errors import IndexTooLarge
from prism_covers.utils.logging import get_logger, get_logger_with_context
from prism_covers.utils.parallel import ordered_map

logger = get_logger(__name__)

LETTERS = 8
UNDEFINED = -1
BRUTE_FORCE_LIMIT = 8
PUBLISHED_COUNTS = {"O333_2": 32245, "O333_3": 29432, "O333_4": 306552}
MISPRINTED_COUNT = 32425

Table = tuple[tuple[int, ...], ...]
Prefix = tuple[int, ...]


def letter_words(sig: PrismSignature) -> list[list[int]]:
    """Relators as letter sequences, exponents expanded."""
    words: list[list[int]] = []
    for relator in relators(sig):
        base = [2 * GENERATORS.index(g) + (0 if e > 0 else 1) for g, e in relator.base.expand()]
        words.append(base * relator.exponent)
    return words


def conjugates_by_letter(words: list[list[int]]) -> list[list[tuple[int, ...]]]:
    """Cyclic conjugates of each relator and its inverse, grouped by first letter."""
    found: set[tuple[int, ...]] = set()
    for word in words:
        inverse = [letter ^ 1 for letter in reversed(word)]
        for w in (word, inverse):
            for i in range(len(w)):
                found.add(tuple(w[i:] + w[:i]))
    grouped: list[list[tuple[int, ...]]] = [[] for _ in range(LETTERS)]
    for w in sorted(found):
        grouped[w[0]].append(w)
    return grouped


class LowIndexEnumerator:
    """Depth-first search over coset tables with at most ``max_index`` rows."""

    def __init__(self, sig: PrismSignature, max_index: int):
        self.sig = sig
        self.max_index = max_index
        self.conjugates = conjugates_by_letter(letter_words(sig))
        self.table = [[UNDEFINED] * LETTERS for _ in range(max_index)]
        self.count = 1
        self._trail: list[tuple[int, int]] = []
        self._deductions: list[tuple[int, int]] = []

    # Table mutation

    def _set(self, coset: int, letter: int, target: int) -> None:
        self.table[coset][letter] = target
        self.table[target][letter ^ 1] = coset
        self._trail.append((coset, letter))
        self._trail.append((target, letter ^ 1))
        self._deductions.append((coset, letter))

    def _undo(self, mark: int, count: int) -> None:
        while len(self._trail) > mark:
            coset, letter = self._trail.pop()
            self.table[coset][letter] = UNDEFINED
        self.count = count
        self._deductions.clear()

    def _scan_check(self, alpha: int, word: tuple[int, ...]) -> bool:
        """Trace ``word`` from ``alpha`` both ways; fill a single gap, fail on a clash."""
        table = self.table
        forward = alpha
        i = 0
        j = len(word) - 1
        while i <= j and table[forward][word[i]] != UNDEFINED:
            forward = table[forward][word[i]]
            i += 1
        if i > j:
            return forward == alpha
        backward = alpha
        while j >= i and table[backward][word[j] ^ 1] != UNDEFINED:
            backward = table[backward][word[j] ^ 1]
            j -= 1
        if j < i:
            return False
        if j == i:
            self._set(forward, word[i], backward)
        return True

    def _process_deductions(self) -> bool:
        while self._deductions:
            alpha, letter = self._deductions.pop()
            for word in self.conjugates[letter]:
                if not self._scan_check(alpha, word):
                    return False
            beta = self.table[alpha][letter]
            for word in self.conjugates[letter ^ 1]:
                if not self._scan_check(beta, word):
                    return False
        return True

    # Search

    def _first_undefined(self) -> tuple[int, int] | None:
        for coset in range(self.count):
            row = self.table[coset]
            for letter in range(LETTERS):
                if row[letter] == UNDEFINED:
                    return coset, letter
        return None

    def _candidates(self, letter: int) -> list[int]:
        inverse = letter ^ 1
        options = [d for d in range(self.count) if self.table[d][inverse] == UNDEFINED]
        if self.count < self.max_index:
            options.append(self.count)
        return options

    def _is_first_in_orbit(self) -> bool:
        """False if renumbering from another base point gives a smaller table."""
        table = self.table
        count = self.count
        for base in range(1, count):
            new_of = {base: 0}
            order = [base]
            decided = False
            row = 0
            while row < len(order) and not decided:
                old_row = table[order[row]]
                current = table[row]
                for letter in range(LETTERS):
                    target = old_row[letter]
                    if target == UNDEFINED or current[letter] == UNDEFINED:
                        decided = True
                        break
                    if target not in new_of:
                        new_of[target] = len(order)
                        order.append(target)
                    renumbered = new_of[target]
                    if renumbered < current[letter]:
                        return False
                    if renumbered > current[letter]:
                        decided = True
                        break
                row += 1
        return True

    def _choose(self, coset: int, letter: int, target: int) -> bool:
        """Define ``coset . letter = target`` and propagate; True if consistent."""
        if target == self.count:
            self.count += 1
        self._set(coset, letter, target)
        return self._process_deductions() and self._is_first_in_orbit()

    def _snapshot(self) -> Table:
        return tuple(tuple(self.table[c]) for c in range(self.count))

    def search(self, prefix: Prefix = ()) -> Iterator[Table]:
        """Complete tables below the node reached by the choice indices in ``prefix``."""
        for choice in prefix:
            position = self._first_undefined()
            if position is None:
                raise ValueError(f"prefix {prefix} is longer than its branch")
            coset, letter = position
            if not self._choose(coset, letter, self._candidates(letter)[choice]):
                raise ValueError(f"prefix {prefix} is not a live branch")
        yield from self._descend()

    def _descend(self) -> Iterator[Table]:
        position = self._first_undefined()
        if position is None:
            yield self._snapshot()
            return
        coset, letter = position
        for target in self._candidates(letter):
            mark, count = len(self._trail), self.count
            if self._choose(coset, letter, target):
                yield from self._descend()
            self._undo(mark, count)

    def prefixes(self, depth: int) -> list[Prefix]:
        """Live choice sequences of length ``depth``, or shorter where a branch completes."""
        out: list[Prefix] = []

        def walk(prefix: Prefix) -> None:
            position = self._first_undefined()
            if position is None or len(prefix) == depth:
                out.append(prefix)
                return
            coset, letter = position
            for choice, target in enumerate(self._candidates(letter)):
                mark, count = len(self._trail), self.count
                if self._choose(coset, letter, target):
                    walk(prefix + (choice,))
                self._undo(mark, count)

        walk(())
        return out


def _search_prefix(item: tuple[PrismSignature, int, Prefix]) -> list[Table]:
    sig, max_index, prefix = item
    return list(LowIndexEnumerator(sig, max_index).search(prefix))


def _log_count(task: EnumerationTask, total: int) -> None:
    name = task.signature.name
    if task.max_index != 24 or name not in PUBLISHED_COUNTS:
        return
    if total == PUBLISHED_COUNTS[name]:
        logger.info("%s: %d classes at index <= 24, as published", name, total)
    elif total == MISPRINTED_COUNT:
        logger.warning("%s: %d classes matches the other published figure, not %d", name, total, PUBLISHED_COUNTS[name])
    else:
        logger.warning("%s: %d classes at index <= 24, published %d", name, total, PUBLISHED_COUNTS[name])


def enumerate_tables(task: EnumerationTask, workers: int = 1, skip: set[Prefix] | None = None) -> Iterator[tuple[Prefix, list[Table]]]:
    """Complete tables grouped by search-tree prefix, in prefix order."""
    prefixes = LowIndexEnumerator(task.signature, task.max_index).prefixes(task.split_depth)
    pending = [p for p in prefixes if not skip or p not in skip]
    logger.info(
        "Enumerating %s to index %d: %d prefixes (%d pending)",
        task.signature.display_name,
        task.max_index,
        len(prefixes),
        len(pending),
    )
    items = [(task.signature, task.max_index, p) for p in pending]
    yield from zip(pending, ordered_map(_search_prefix, items, workers=workers), strict=True)


def enumerate_subgroups(task: EnumerationTask, workers: int = 1, progress_every: int = 1000) -> Iterator[PermRep]:
    """One transitive rep per conjugacy class of subgroups of index <= ``task.max_index``."""
    progress = get_logger_with_context(__name__, signature=task.signature.display_name, max_index=task.max_index)
    total = 0
    for _, tables in enumerate_tables(task, workers):
        for table in tables:
            total += 1
            if total % progress_every == 0:
                progress.info("%d classes so far", total)
            yield rep_from_table(table)
    _log_count(task, total)


def format_prefix(prefix: Prefix) -> str:
    return " ".join(str(c) for c in prefix) if prefix else "-"


def parse_prefix(text: str) -> Prefix:
    text = text.strip()
    return () if text == "-" else tuple(int(c) for c in text.split())


def enumerate_to_file(
    task: EnumerationTask,
    output: Path | str,
    checkpoint: Path | str | None = None,
    resume: bool = False,
    workers: int = 1,
) -> EnumerationSummary:
    """Stream reps to ``output``, recording finished prefixes in ``checkpoint``.

    With ``resume`` the prefixes listed in ``checkpoint`` are skipped and new
    reps are appended; otherwise both files are rewritten.
    """
    run_log = get_logger_with_context(__name__, signature=task.signature.display_name, max_index=task.max_index)
    done: set[Prefix] = set()
    checkpoint_path = Path(checkpoint) if checkpoint is not None else None
    if resume and checkpoint_path is not None and checkpoint_path.exists():
        done = {parse_prefix(line) for line in checkpoint_path.read_text().splitlines() if line.strip()}
        run_log = run_log.bind(checkpoint=str(checkpoint_path))
        run_log.info("Resuming with %d finished prefixes", len(done))
    if not resume:
        Path(output).write_text("")
        if checkpoint_path is not None:
            checkpoint_path.write_text("")

    by_index: dict[int, int] = {}
    total = 0
    prefixes = 0
    for prefix, tables in enumerate_tables(task, workers, skip=done):
        write_reps((rep_from_table(t) for t in tables), output, append=True)
        for table in tables:
            by_index[len(table)] = by_index.get(len(table), 0) + 1
        total += len(tables)
        prefixes += 1
        run_log.debug("Prefix %s: %d classes", format_prefix(prefix), len(tables))
        if checkpoint_path is not None:
            with open(checkpoint_path, "a") as fh:
                fh.write(format_prefix(prefix) + "\n")
    if not done:
        _log_count(task, total)
    return EnumerationSummary(
        signature=task.signature.display_name,
        max_index=task.max_index,
        total=total,
        by_index=dict(sorted(by_index.items())),
        prefixes=prefixes,
    )


Images = tuple[int, ...]


def _compose(first: Images, second: Images) -> Images:
    """Apply ``first`` then ``second``."""
    return tuple(second[i] for i in first)


def _invert(images: Images) -> Images:
    out = [0] * len(images)
    for i, j in enumerate(images):
        out[j] = i
    return tuple(out)


def _power_is_identity(images: Images, exponent: int) -> bool:
    result = tuple(range(len(images)))
    for _ in range(exponent):
        result = _compose(result, images)
    return result == tuple(range(len(images)))


def _permutations_of_order(degree: int, order: int) -> list[Images]:
    return [p for p in itertools.permutations(range(degree)) if _power_is_identity(p, order)]


def _cycle_type_representatives(degree: int, order: int) -> list[Images]:
    """One permutation per cycle type whose cycle lengths divide ``order``."""
    lengths = [d for d in range(1, degree + 1) if order % d == 0]

    def partitions(remaining: int, largest: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield []
            return
        for part in lengths:
            if part <= min(remaining, largest):
                for rest in partitions(remaining - part, part):
                    yield [part, *rest]

    reps: list[Images] = []
    for parts in partitions(degree, degree):
        images = list(range(degree))
        start = 0
        for part in parts:
            for i in range(part):
                images[start + i] = start + (i + 1) % part
            start += part
        reps.append(tuple(images))
    return reps


def brute_force_reps(sig: PrismSignature, index: int) -> list[PermRep]:
    """All conjugacy classes of transitive reps of degree ``index``, by exhaustion.

    ``sigma(x)`` runs over one permutation per cycle type; the other images
    run over every permutation of the right order. Used to cross-check the
    backtracking search at small index.

    Raises:
        IndexTooLarge: If ``index`` exceeds 8
    """
    if index > BRUTE_FORCE_LIMIT:
        raise IndexTooLarge(index, BRUTE_FORCE_LIMIT)
    if index < 1:
        return []

    pair_relators = {
        frozenset(g for g, _ in r.base.letters): r for r in relators(sig) if len(r.base.letters) == 2
    }
    chosen: dict[Generator, Images] = {}

    def holds(a: Generator, b: Generator) -> bool:
        relator = pair_relators[frozenset((a, b))]
        step = tuple(range(index))
        for g, e in relator.base.expand():
            step = _compose(step, chosen[g] if e > 0 else _invert(chosen[g]))
        return _power_is_identity(step, relator.exponent)

    pools = {g: _permutations_of_order(index, sig.label(PAIRING_AXIS[g])) for g in GENERATORS[1:]}
    x, y, z, w = GENERATORS
    found: dict[Table, PermRep] = {}
    for x_images in _cycle_type_representatives(index, sig.label(PAIRING_AXIS[x])):
        chosen[x] = x_images
        for y_images in pools[y]:
            chosen[y] = y_images
            if not holds(x, y):
                continue
            for z_images in pools[z]:
                chosen[z] = z_images
                if not (holds(x, z) and holds(y, z)):
                    continue
                for w_images in pools[w]:
                    chosen[w] = w_images
                    if not (holds(y, w) and holds(z, w)):
                        continue
                    rep = PermRep.from_images(chosen)
                    if not is_transitive(rep):
                        continue
                    form = canonical_form(rep)
                    if form not in found:
                        found[form] = rep_from_table(form)
    logger.debug("Brute force for %s at index %d: %d classes", sig.display_name, index, len(found))
    return [found[form] for form in sorted(found)]
