"""Construction A, the double-negacirculant code builders, the Z_4
seed-completion builder, and the embedded dataset of 21 length-36 codes."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import zk
from .codes import ZkCode, dual_code, is_self_dual
from .errors import (CompletionFailed, NotDoublyEven, NotSelfDual,
                     UnknownName)
from .intlinalg import hnf
from .lattice import Lattice

Z4_SEED_NAMES = tuple(f"C36_{i}" for i in range(1, 11))
NEGACIRCULANT_NAMES = tuple(f"D36_{i}" for i in range(1, 10)) + ("E36_1", "E36_2")
DATASET_NAMES = Z4_SEED_NAMES + NEGACIRCULANT_NAMES


def construction_a(code: ZkCode) -> Lattice:
    """The unimodular lattice (1/sqrt(k)) {x in Z^n : x mod k in C} of a
    self-dual code."""
    if not is_self_dual(code):
        raise NotSelfDual("Construction A needs a self-dual code")
    k, n = code.modulus, code.length
    rows = [list(g) for g in code.generators]
    rows += [[k * (i == j) for j in range(n)] for i in range(n)]
    return Lattice.of(hnf(rows), k)


def negacirculant(first_row, k):
    """Square matrix whose rows cycle right with the wrapped entry negated."""
    m = len(first_row)
    rows = [[x % k for x in first_row]]
    for _ in range(m - 1):
        prev = rows[-1]
        rows.append([(-prev[-1]) % k] + prev[:-1])
    return rows


@dataclass(frozen=True)
class NegacirculantSpec:
    modulus: int
    first_row_a: tuple
    first_row_b: tuple

    def __post_init__(self):
        for row in (self.first_row_a, self.first_row_b):
            if len(row) != 9 or any(not 0 <= x < self.modulus for x in row):
                raise ValueError("first rows must be 9 entries in [0, k)")


def negacirculant_identity_holds(spec: NegacirculantSpec) -> bool:
    """Check A A^T + B B^T == -I_9 (mod k)."""
    k = spec.modulus
    a = negacirculant(spec.first_row_a, k)
    b = negacirculant(spec.first_row_b, k)
    for i in range(9):
        for j in range(9):
            s = sum(a[i][t] * a[j][t] + b[i][t] * b[j][t] for t in range(9))
            if (s + (i == j)) % k:
                return False
    return True


def build_double_negacirculant(spec: NegacirculantSpec) -> ZkCode:
    """The [36, 18] self-dual code with generator (I_18 | [[A,B],[-B^T,A^T]])."""
    k = spec.modulus
    a = negacirculant(spec.first_row_a, k)
    b = negacirculant(spec.first_row_b, k)
    if not negacirculant_identity_holds(spec):
        raise NotSelfDual("A A^T + B B^T is not -I_9 mod k")
    rows = []
    for i in range(18):
        left = [int(i == j) for j in range(18)]
        if i < 9:
            right = a[i] + b[i]
        else:
            r = i - 9
            right = [(-b[j][r]) % k for j in range(9)] + [a[j][r] % k for j in range(9)]
        rows.append(left + right)
    code = ZkCode.from_rows(k, 36, rows)
    if not is_self_dual(code):
        raise NotSelfDual("double negacirculant code failed the self-dual check")
    return code


@dataclass(frozen=True)
class Z4Seed:
    """7 x 29 matrix over Z_4; the full generator starts (I_7 | rows)."""

    rows: tuple

    def __post_init__(self):
        if len(self.rows) != 7 or any(len(r) != 29 for r in self.rows):
            raise ValueError("seed must be 7 x 29")
        if any(not 0 <= x < 4 for r in self.rows for x in r):
            raise ValueError("seed entries must lie in [0, 4)")


def build_z4(seed: Z4Seed) -> ZkCode:
    """Self-dual Z_4 code of length 36 whose free part is (I_7 | seed);
    the order-2 part is reconstructed from the dual of the binary residue."""
    top = [[int(i == j) for j in range(7)] + list(seed.rows[i]) for i in range(7)]
    residue_rows = [[x % 2 for x in row] for row in top]
    residue = ZkCode.from_rows(2, 36, residue_rows)
    if len(residue.generators) != 7:
        raise NotDoublyEven("residue code does not have dimension 7")
    for word in residue.words():
        if sum(word) % 4:
            raise NotDoublyEven("residue code has a weight not divisible by 4")
    dual_gens = dual_code(residue).generators
    res_pivots = {next(i for i, x in enumerate(g) if x) for g in residue.generators}
    completion = [g for g in dual_gens
                  if next(i for i, x in enumerate(g) if x) not in res_pivots]
    if len(completion) != 29 - 7:
        raise CompletionFailed("dual completion has the wrong rank")
    rows = top + [[2 * x for x in g] for g in completion]
    code = ZkCode.from_rows(4, 36, rows)
    if not is_self_dual(code):
        raise CompletionFailed("completed code is not self-dual")
    return code


def _data_text(name):
    try:
        return (resources.files("ulat36") / "data" / f"{name}.txt").read_text()
    except FileNotFoundError:
        raise UnknownName(f"no dataset entry named {name!r}") from None


def dataset_sha256(name) -> str:
    return hashlib.sha256(_data_text(name).encode()).hexdigest()


def load_seed(name) -> Z4Seed:
    if name not in Z4_SEED_NAMES:
        raise UnknownName(f"{name!r} is not a Z4 seed name")
    lines = _data_text(name).strip().splitlines()
    k, n, r = map(int, lines[0].split())
    assert (k, n, r) == (4, 29, 7)
    return Z4Seed(tuple(tuple(map(int, line.split())) for line in lines[1:8]))


def load_negacirculant_spec(name) -> NegacirculantSpec:
    if name not in NEGACIRCULANT_NAMES:
        raise UnknownName(f"{name!r} is not a negacirculant spec name")
    lines = _data_text(name).strip().splitlines()
    k, n, r = map(int, lines[0].split())
    assert (n, r) == (9, 2)
    return NegacirculantSpec(k, tuple(map(int, lines[1].split())),
                             tuple(map(int, lines[2].split())))


@lru_cache(maxsize=None)
def dataset(name) -> ZkCode:
    """One of the embedded length-36 self-dual codes, by identifier."""
    if name in Z4_SEED_NAMES:
        return build_z4(load_seed(name))
    if name in NEGACIRCULANT_NAMES:
        return build_double_negacirculant(load_negacirculant_spec(name))
    raise UnknownName(f"no dataset entry named {name!r}")


@lru_cache(maxsize=None)
def dataset_lattice(name) -> Lattice:
    return construction_a(dataset(name))


def dataset_label(name) -> str:
    """Display label A_k(<name>) for report rows."""
    code = dataset(name)
    return f"A{code.modulus}({name})"


# Expected kissing numbers and sorted neighbor norm-3 counts for the 21
# dataset lattices, used for PASS/FAIL self-checks of reproduction runs.
EXPECTED_INVARIANTS = {
    "C36_1": (51032, (0, 840)),
    "C36_2": (42840, (0, 960)),
    "C36_3": (51032, (0, 840)),
    "C36_4": (51032, (0, 840)),
    "C36_5": (51032, (0, 840)),
    "C36_6": (42840, (0, 960)),
    "C36_7": (42840, (0, 960)),
    "C36_8": (42840, (0, 960)),
    "C36_9": (51032, (0, 840)),
    "C36_10": (51032, (0, 840)),
    "D36_1": (42840, (144, 816)),
    "D36_2": (42840, (456, 504)),
    "D36_3": (42840, (240, 720)),
    "D36_4": (42840, (240, 720)),
    "D36_5": (42840, (288, 672)),
    "D36_6": (42840, (144, 816)),
    "D36_7": (42840, (144, 816)),
    "D36_8": (42840, (384, 576)),
    "D36_9": (42840, (288, 672)),
    "E36_1": (42840, (456, 504)),
    "E36_2": (42840, (384, 576)),
}

# Sources whose minimum-norm-3 neighbors carry long shadows, with the
# derived lattice names they are exported under.
LONG_SHADOW_SOURCES = {
    "N36_1": "C36_2",
    "N36_2": "C36_6",
    "N36_3": "C36_7",
    "N36_4": "C36_8",
}
