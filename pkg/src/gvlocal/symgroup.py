"""Symmetric-group combinatorics and a brute-force monodromy enumerator.

Permutations are one-line tuples ``p`` with ``p[i]`` the image of ``i``.
Products compose right-to-left: ``(p * q)[i] == p[q[i]]``, so ``q`` acts
first.  Commutators are ``[x, y] = x^-1 y^-1 x y`` under that product.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .series import DomainError

__all__ = [
    "BudgetExceeded",
    "CacheError",
    "CharTable",
    "Partition",
    "SymmetricGroup",
    "brute_count",
    "char_table",
    "class_size",
    "commutator_class_count",
    "dim_hook",
    "format_char_table",
    "mn_character",
    "parse_char_table",
    "partitions",
]

MAX_DEGREE = 10
DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    """An enumeration or table request is larger than the configured budget."""


class CacheError(ValueError):
    """A character-table cache file failed to parse or verify."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a weakly decreasing positive sequence: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def cycle_type(cls, cycles: Iterable[int], d: int) -> Partition:
        """The class of ``d`` letters with the given nontrivial cycles plus fixed points."""
        cycles = sorted((c for c in cycles if c > 1), reverse=True)
        fixed = d - sum(cycles)
        if fixed < 0:
            raise DomainError(f"cycles {cycles} do not fit in degree {d}")
        return cls(cycles + [1] * fixed)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def nontrivial(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p > 1)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _partitions(d: int, largest: int):
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 1:
        raise ValueError("d must be positive")
    return tuple(Partition(p) for p in _partitions(d, d))


def class_size(mu: Partition) -> int:
    denom = 1
    for part, m in mu.multiplicities().items():
        denom *= part**m * math.factorial(m)
    return math.factorial(mu.size) // denom


def dim_hook(lam: Partition) -> int:
    conj = [sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])]
    hooks = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(lam.size) // hooks


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # beta: strictly decreasing beta-numbers of the shape; mu: remaining cycle lengths
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    members = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in members:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = tuple(sorted((members - {b}) | {target}, reverse=True))
        total += (-1) ** height * _mn(new_beta, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Character of the irreducible ``lam`` on the class ``mu`` (Murnaghan-Nakayama)."""
    if lam.size != mu.size:
        raise DomainError(f"|{lam}| != |{mu}|")
    n = lam.length
    beta = tuple(p + n - 1 - i for i, p in enumerate(lam.parts))
    return _mn(beta, mu.parts)


@dataclass(frozen=True)
class CharTable:
    """Rows are irreducibles, columns classes; both indexed by ``classes``."""

    d: int
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    dims: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]

    def column(self, mu: Partition) -> tuple[int, ...]:
        j = self.classes.index(mu)
        return tuple(row[j] for row in self.values)

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[self.classes.index(lam)][self.classes.index(mu)]

    def check(self) -> list[str]:
        """Return a list of violated invariants (empty when the table is sound)."""
        problems = []
        order = math.factorial(self.d)
        n = len(self.classes)
        if list(self.classes) != list(partitions(self.d)):
            problems.append("class list is not the partitions of d in canonical order")
            return problems
        if sum(self.class_sizes) != order:
            problems.append("class sizes do not sum to d!")
        if sum(f * f for f in self.dims) != order:
            problems.append("squared dimensions do not sum to d!")
        identity = self.classes.index(Partition([1] * self.d))
        if tuple(row[identity] for row in self.values) != self.dims:
            problems.append("dimensions differ from the identity column")
        for a in range(n):
            for b in range(a, n):
                col = sum(self.values[i][a] * self.values[i][b] for i in range(n))
                if Fraction(col * self.class_sizes[a], order) != (a == b):
                    problems.append(f"column orthogonality fails at {self.classes[a]}, {self.classes[b]}")
                row = sum(
                    self.class_sizes[j] * self.values[a][j] * self.values[b][j] for j in range(n)
                )
                if row != (order if a == b else 0):
                    problems.append(f"row orthogonality fails at {self.classes[a]}, {self.classes[b]}")
        return problems


@lru_cache(maxsize=None)
def _char_table(d: int) -> CharTable:
    classes = partitions(d)
    table = CharTable(
        d=d,
        classes=classes,
        class_sizes=tuple(class_size(mu) for mu in classes),
        dims=tuple(dim_hook(lam) for lam in classes),
        values=tuple(tuple(mn_character(lam, mu) for mu in classes) for lam in classes),
    )
    problems = table.check()
    if problems:
        raise AssertionError(f"character table of S_{d} is inconsistent: {problems[0]}")
    return table


def char_table(d: int, max_degree: int = MAX_DEGREE) -> CharTable:
    if d < 1:
        raise ValueError("d must be positive")
    if d > max_degree:
        raise BudgetExceeded(f"S_{d} exceeds the configured maximum degree {max_degree}")
    return _char_table(d)


def format_char_table(table: CharTable) -> str:
    """Canonical text form used by the on-disk cache."""
    lines = [f"symd {table.d} {len(table.classes)}"]
    lines += [" ".join(map(str, mu.parts)) for mu in table.classes]
    lines.append(" ".join(map(str, table.class_sizes)))
    lines.append(" ".join(map(str, table.dims)))
    lines += [" ".join(map(str, row)) for row in table.values]
    return "\n".join(lines) + "\n"


def parse_char_table(text: str, source: str = "<string>") -> CharTable:
    """Parse and verify a cached table; any defect raises :class:`CacheError`."""
    try:
        lines = text.split("\n")
        if lines[-1] != "":
            raise ValueError("missing final newline")
        lines = lines[:-1]
        tag, d, n = lines[0].split(" ")
        if tag != "symd":
            raise ValueError("bad header")
        d, n = int(d), int(n)
        if len(lines) != 1 + n + 2 + n:
            raise ValueError("wrong number of lines")
        classes = tuple(Partition(map(int, lines[1 + i].split(" "))) for i in range(n))
        sizes = tuple(map(int, lines[1 + n].split(" ")))
        dims = tuple(map(int, lines[2 + n].split(" ")))
        values = tuple(tuple(map(int, lines[3 + n + i].split(" "))) for i in range(n))
        if len(sizes) != n or len(dims) != n or any(len(row) != n for row in values):
            raise ValueError("ragged table")
        table = CharTable(d, classes, sizes, dims, values)
    except (ValueError, IndexError) as exc:
        raise CacheError(f"{source}: unreadable character table ({exc})") from exc
    if any(mu.size != d for mu in classes):
        raise CacheError(f"{source}: class of the wrong size")
    problems = table.check()
    if problems:
        raise CacheError(f"{source}: {problems[0]}")
    return table


def cache_path(cache_dir: Path, d: int) -> Path:
    return Path(cache_dir) / f"symd_{d}.txt"


def write_char_table(cache_dir: Path, d: int) -> Path:
    path = cache_path(cache_dir, d)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(format_char_table(char_table(d)).encode("ascii"))
    return path


def read_char_table(path: Path) -> CharTable:
    path = Path(path)
    try:
        text = path.read_bytes().decode("ascii")
    except UnicodeDecodeError as exc:
        raise CacheError(f"{path}: not ASCII text") from exc
    return parse_char_table(text, str(path))


def commutator_class_count(d: int, k: Partition) -> int:
    """``#{(x, y) in S_d^2 : [x, y] in class k}`` via the Frobenius character sum."""
    table = char_table(d)
    order = math.factorial(d)
    col = table.column(k)
    per_element = sum(Fraction(order, f) * chi for f, chi in zip(table.dims, col))
    beta = class_size(k) * per_element
    if beta.denominator != 1 or beta % order:
        raise AssertionError(f"|S_{d}| does not divide beta for class {k}")
    return int(beta)


class SymmetricGroup:
    """S_d with elements numbered ``0 .. d!-1`` and precomputed product tables."""

    def __init__(self, d: int):
        self.d = d
        self.elements: list[tuple[int, ...]] = list(itertools.permutations(range(d)))
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.order = len(self.elements)
        self.identity = self.index[tuple(range(d))]
        self.mul = [
            [self.index[tuple(p[q[i]] for i in range(d))] for q in self.elements]
            for p in self.elements
        ]
        self.inv = [self.index[tuple(sorted(range(d), key=p.__getitem__))] for p in self.elements]
        self.cls = [self._cycle_type(p) for p in self.elements]
        self.by_class: dict[Partition, list[int]] = {}
        for i, mu in enumerate(self.cls):
            self.by_class.setdefault(mu, []).append(i)
        self._comm = None
        self._comm_solutions = None

    def _cycle_type(self, p) -> Partition:
        seen = [False] * self.d
        lengths = []
        for start in range(self.d):
            n = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = p[i]
                n += 1
            if n:
                lengths.append(n)
        return Partition(sorted(lengths, reverse=True))

    @property
    def comm(self) -> list[list[int]]:
        if self._comm is None:
            mul, inv = self.mul, self.inv
            self._comm = [
                [mul[mul[inv[x]][inv[y]]][mul[x][y]] for y in range(self.order)]
                for x in range(self.order)
            ]
        return self._comm

    def commutator_solutions(self, x: int, z: int) -> list[int]:
        """All ``y`` with ``[x, y] == z``."""
        if self._comm_solutions is None:
            table = []
            for xi in range(self.order):
                row: dict[int, list[int]] = {}
                for y, c in enumerate(self.comm[xi]):
                    row.setdefault(c, []).append(y)
                table.append(row)
            self._comm_solutions = table
        return self._comm_solutions[x].get(z, [])

    def transitive(self, gens: Sequence[int]) -> bool:
        d = self.d
        if d == 1:
            return True
        perms = [self.elements[g] for g in gens]
        reached = 1
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for p in perms:
                j = p[i]
                if not reached >> j & 1:
                    reached |= 1 << j
                    frontier.append(j)
        return reached == (1 << d) - 1


@lru_cache(maxsize=8)
def symmetric_group(d: int) -> SymmetricGroup:
    return SymmetricGroup(d)


def enumeration_steps(d: int, g: int, profile: Sequence[Partition]) -> int:
    """Rough size of the search performed by :func:`brute_count`."""
    order = math.factorial(d)
    reps = len(partitions(d))
    slots = [("pair", None)] * g + [("class", mu) for mu in profile]
    if not slots:
        return 1
    steps = 1
    for i, (kind, mu) in enumerate(slots[:-1]):
        base = reps if i == 0 else (order if kind == "pair" else class_size(mu))
        steps *= base * order if kind == "pair" else base
    if slots[-1][0] == "pair":
        steps *= reps if len(slots) == 1 else order
    return steps


def brute_count(
    d: int,
    g: int,
    profile: Sequence[Partition] = (),
    transitive_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Fraction:
    """Weighted cover count by direct enumeration of monodromy tuples.

    Counts ``(x1, y1, ..., xg, yg, s1, ..., sr)`` with ``s_i`` in class
    ``profile[i]`` and ``[x1,y1]...[xg,yg] s1...sr == 1``, divided by ``d!``.
    The first slot ranges over class representatives only (weighted by class
    size) and the last slot is solved for rather than enumerated.
    """
    profile = [mu if isinstance(mu, Partition) else Partition(mu) for mu in profile]
    if any(mu.size != d for mu in profile):
        raise DomainError("every branch class must be a partition of d")
    if d > MAX_DEGREE:
        raise BudgetExceeded(f"degree {d} exceeds the maximum {MAX_DEGREE}")
    steps = enumeration_steps(d, g, profile)
    if steps > budget:
        raise BudgetExceeded(f"brute force needs ~{steps} steps, budget is {budget}")

    G = symmetric_group(d)
    mul = G.mul
    slots = [("pair", None)] * g + [("class", mu) for mu in profile]
    if not slots:
        hit = not transitive_only or d == 1
        return Fraction(int(hit), G.order)

    # Candidate lists for every slot except the last: (generators, product, weight).
    free_slots = []
    for i, (kind, mu) in enumerate(slots[:-1]):
        if i == 0:
            first = [(G.by_class[c][0], len(G.by_class[c])) for c in partitions(d)]
        if kind == "pair":
            xs = first if i == 0 else [(x, 1) for x in range(G.order)]
            items = [((x, y), G.comm[x][y], w) for x, w in xs for y in range(G.order)]
        else:
            ss = (
                [(s, w) for s, w in first if G.cls[s] == mu]
                if i == 0
                else [(s, 1) for s in G.by_class[mu]]
            )
            items = [((s,), s, w) for s, w in ss]
        free_slots.append(items)

    last_kind, last_mu = slots[-1]
    total = 0
    for combo in itertools.product(*free_slots):
        prod = G.identity
        weight = 1
        gens: list[int] = []
        for item_gens, value, w in combo:
            prod = mul[prod][value]
            weight *= w
            gens.extend(item_gens)
        need = G.inv[prod]
        if last_kind == "class":
            if G.cls[need] != last_mu:
                continue
            if transitive_only and not G.transitive(gens + [need]):
                continue
            total += weight
        else:
            xs = (
                [(G.by_class[c][0], len(G.by_class[c])) for c in partitions(d)]
                if not free_slots
                else [(x, 1) for x in range(G.order)]
            )
            for x, w in xs:
                ys = G.commutator_solutions(x, need)
                if not transitive_only:
                    total += weight * w * len(ys)
                    continue
                for y in ys:
                    if G.transitive(gens + [x, y]):
                        total += weight * w
    return Fraction(total, G.order)
