"""Codes over Z_k: duals, self-duality, weight enumerators, MacWilliams
transforms, Z_4 residue/torsion structure and Euclidean weights, the
constrained weight-enumerator solver, and design extraction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb

from . import zk
from .errors import (CardinalityTooLarge, NonIntegerResult, NoSolution,
                     NotSelfDual, TorsionMismatch)
from .intlinalg import hnf, identity_rows, left_kernel, transpose
from .polynomials import UnivariatePoly

ENUM_GUARD = 1 << 26


@dataclass(frozen=True)
class ZkCode:
    """A Z_k-submodule of Z_k^n, stored by its canonical generator rows."""

    modulus: int
    length: int
    generators: tuple

    @classmethod
    def from_rows(cls, modulus, length, rows):
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        for r in rows:
            if len(r) != length:
                raise ValueError("generator length mismatch")
        canon = zk.howell_form(rows, modulus, length)
        return cls(modulus, length, tuple(tuple(r) for r in canon))

    @cached_property
    def cardinality(self):
        return zk.span_size(list(self.generators), self.modulus)

    def contains(self, vec):
        return zk.member(vec, list(self.generators), self.modulus)

    def words(self):
        if self.cardinality > ENUM_GUARD:
            raise CardinalityTooLarge(
                f"|C| = {self.cardinality} exceeds enumeration guard {ENUM_GUARD}")
        return zk.iter_span(list(self.generators), self.modulus, self.length)

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(f"{self.modulus} {self.length} {len(self.generators)}\n")
            for row in self.generators:
                fh.write(" ".join(map(str, row)) + "\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            k, n, r = map(int, fh.readline().split())
            rows = [list(map(int, fh.readline().split())) for _ in range(r)]
        return cls.from_rows(k, n, rows)


def dual_code(code: ZkCode) -> ZkCode:
    """All x with x . g == 0 (mod k) for every generator g."""
    k, n = code.modulus, code.length
    gens = [list(g) for g in code.generators]
    if not gens:
        return ZkCode.from_rows(k, n, identity_rows(n))
    r = len(gens)
    stacked = transpose(gens) + [[k if i == j else 0 for j in range(r)]
                                 for i in range(r)]
    kernel = left_kernel(stacked, r)
    return ZkCode.from_rows(k, n, [row[:n] for row in kernel])


def is_self_dual(code: ZkCode) -> bool:
    k, n = code.modulus, code.length
    for i, g in enumerate(code.generators):
        for h in code.generators[i:]:
            if sum(a * b for a, b in zip(g, h)) % k:
                return False
    return code.cardinality ** 2 == k ** n


def hamming_we(code: ZkCode) -> UnivariatePoly:
    """Weight enumerator sum_c y^wt(c), by full enumeration."""
    counts = {}
    for word in code.words():
        w = sum(1 for x in word if x)
        counts[w] = counts.get(w, 0) + 1
    return UnivariatePoly.from_dict(counts)


def macwilliams_dual_we(w: UnivariatePoly, n: int, cardinality: int,
                        q: int) -> UnivariatePoly:
    """Dual weight enumerator (1/|C|) (1+(q-1)y)^n W((1-y)/(1+(q-1)y))."""
    if q not in (2, 3):
        raise ValueError("q must be 2 or 3")
    if w.degree > n:
        raise ValueError("enumerator degree exceeds length")
    out = [Fraction(0)] * (n + 1)
    for wt, coeff in w.terms:
        # (1-y)^wt (1+(q-1)y)^(n-wt)
        for a in range(wt + 1):
            ca = comb(wt, a) * (-1) ** a
            for b in range(n - wt + 1):
                out[a + b] += coeff * ca * comb(n - wt, b) * (q - 1) ** b
    out = [c / cardinality for c in out]
    for e, c in enumerate(out):
        if c.denominator != 1:
            raise NonIntegerResult(f"coefficient of y^{e} is {c}")
    return UnivariatePoly.from_dict({e: c for e, c in enumerate(out) if c})


@dataclass(frozen=True)
class BinaryCodePair:
    residue: ZkCode
    torsion: ZkCode


def residue_torsion(code: ZkCode) -> BinaryCodePair:
    """Residue code {c mod 2} and torsion code {c mod 2 : 2c in C} of a
    Z_4 code; for a self-dual code the torsion must equal the dual of the
    residue."""
    if code.modulus != 4:
        raise ValueError("residue/torsion need modulus 4")
    n = code.length
    residue = ZkCode.from_rows(2, n, [[x % 2 for x in g] for g in code.generators])
    # x has 2x in C iff 2x lies in the integer lattice spanned by the
    # lifted generators and 4Z^n; solve y*B == 0 (mod 2) for that basis B.
    basis = hnf([list(g) for g in code.generators] +
                [[4 * (i == j) for j in range(n)] for i in range(n)])
    kernel2 = _f2_left_kernel([[x % 2 for x in row] for row in basis])
    half_rows = []
    for y in kernel2:
        v = [sum(y[i] * basis[i][j] for i in range(n)) for j in range(n)]
        half_rows.append([(x // 2) % 2 for x in v])
    torsion = ZkCode.from_rows(2, n, half_rows + [list(g) for g in residue.generators])
    if is_self_dual(code) and torsion != dual_code(residue):
        raise TorsionMismatch("torsion code differs from dual of residue")
    return BinaryCodePair(residue, torsion)


def _f2_left_kernel(rows):
    """Left kernel over F_2 of a square 0/1 matrix, as 0/1 vectors."""
    n = len(rows)
    # carry [row | identity] as bitmasks
    work = []
    for i, row in enumerate(rows):
        mask = 0
        for j, x in enumerate(row):
            if x & 1:
                mask |= 1 << j
        work.append((mask, 1 << i))
    pivots = {}
    for idx in range(n):
        mask, tag = work[idx]
        for col, (pm, pt) in pivots.items():
            if mask >> col & 1:
                mask ^= pm
                tag ^= pt
        if mask:
            col = (mask & -mask).bit_length() - 1
            pivots[col] = (mask, tag)
            work[idx] = (mask, tag)
        else:
            work[idx] = (0, tag)
    out = []
    for mask, tag in work:
        if mask == 0:
            out.append([(tag >> i) & 1 for i in range(n)])
    return out


def euclidean_weight(vec) -> int:
    """m_1 + 4 m_2 + m_3 for a vector over Z_4."""
    total = 0
    for x in vec:
        if not 0 <= x < 4:
            raise ValueError("entries must lie in [0, 4)")
        total += (0, 1, 4, 1)[x]
    return total


def min_euclidean_weight(code: ZkCode) -> int:
    """Brute-force d_E over all nonzero codewords (enumeration-guarded)."""
    best = None
    for word in code.words():
        if any(word):
            e = euclidean_weight(word)
            if best is None or e < best:
                best = e
    if best is None:
        raise ValueError("zero code has no nonzero codeword")
    return best


def min_euclidean_bounds(code: ZkCode):
    """(lower, upper) bounds on d_E of a self-dual Z_4 code from its
    residue code alone: lower = min(d(C1), 4 d(C2)), upper = 4 d(C2),
    with d(C2) read off the MacWilliams dual distribution of C1."""
    if code.modulus != 4:
        raise ValueError("Euclidean bounds need modulus 4")
    if not is_self_dual(code):
        raise NotSelfDual("Euclidean bounds require a self-dual code")
    n = code.length
    residue = ZkCode.from_rows(2, n, [[x % 2 for x in g] for g in code.generators])
    w1 = hamming_we(residue)
    d1 = w1.min_positive_exponent()
    d1 = math.inf if d1 is None else d1
    w2 = macwilliams_dual_we(w1, n, residue.cardinality, 2)
    d2 = w2.min_positive_exponent()
    d2 = math.inf if d2 is None else d2
    return min(d1, 4 * d2), 4 * d2


def _krawtchouk(n, e, w, q=2):
    return sum((-1) ** j * (q - 1) ** (e - j) * comb(w, j) * comb(n - w, e - j)
               for j in range(e + 1))


def check_constrained_we(poly: UnivariatePoly, n, dim, weights_divisible_by,
                         min_weight, dual_min_weight, contains_allone) -> bool:
    """Round-trip validation of a solve_constrained_we candidate."""
    if poly.coeff(0) != 1:
        return False
    if poly.coefficient_sum() != 2 ** dim:
        return False
    if not (poly.is_integral() and poly.is_nonnegative()):
        return False
    for e, c in poly.terms:
        if e == 0:
            continue
        if e % weights_divisible_by or e < min_weight:
            return False
    dual = macwilliams_dual_we(poly, n, 2 ** dim, 2)
    if any(0 < e < dual_min_weight and c for e, c in dual.terms):
        return False
    if contains_allone is True:
        if any(poly.coeff(e) != poly.coeff(n - e) for e in range(n + 1)):
            return False
    if contains_allone is False and poly.coeff(n):
        return False
    return True


def solve_constrained_we(n, dim, weights_divisible_by, min_weight,
                         dual_min_weight, contains_allone=None):
    """All weight enumerators of binary [n, dim] codes with the stated
    weight divisibility, minimum weight, and dual minimum weight.

    contains_allone True forces the A_w = A_{n-w} symmetry, False forces
    A_n = 0, None unions both cases.
    """
    branches = (True, False) if contains_allone is None else (contains_allone,)
    seen, out = set(), []
    for branch in branches:
        for poly in _solve_we_branch(n, dim, weights_divisible_by, min_weight,
                                     dual_min_weight, branch):
            if poly not in seen:
                seen.add(poly)
                out.append(poly)
    if not out:
        raise NoSolution("no enumerator satisfies the constraints")
    return sorted(out, key=lambda p: p.terms)


def _solve_we_branch(n, dim, weights_divisible_by, min_weight,
                     dual_min_weight, contains_allone):
    exps = [w for w in range(min_weight, n + 1) if w % weights_divisible_by == 0]
    total = 2 ** dim
    nv = len(exps)
    idx = {w: i for i, w in enumerate(exps)}
    eqs = []
    # sum of coefficients (A_0 = 1 moved to the right side)
    eqs.append(([Fraction(1)] * nv, Fraction(total - 1)))
    # vanishing dual coefficients below dual_min_weight
    for e in range(1, dual_min_weight):
        row = [Fraction(_krawtchouk(n, e, w)) for w in exps]
        eqs.append((row, Fraction(-_krawtchouk(n, e, 0))))
    if contains_allone:
        if n not in idx:
            return []
        for w in exps:
            row = [Fraction(0)] * nv
            row[idx[w]] = Fraction(1)
            mirror = n - w
            if mirror == 0:
                eqs.append((row, Fraction(1)))
            elif mirror in idx:
                if mirror > w:
                    row[idx[mirror]] -= 1
                    eqs.append((row, Fraction(0)))
            else:
                eqs.append((row, Fraction(0)))
    elif n in idx:
        row = [Fraction(0)] * nv
        row[idx[n]] = Fraction(1)
        eqs.append((row, Fraction(0)))

    solutions = []
    for assign in _nonneg_integer_solutions(eqs, nv, total - 1):
        d = {0: 1}
        d.update({w: assign[i] for i, w in enumerate(exps) if assign[i]})
        poly = UnivariatePoly.from_dict(d)
        assert check_constrained_we(poly, n, dim, weights_divisible_by,
                                    min_weight, dual_min_weight, contains_allone)
        solutions.append(poly)
    return solutions


def _nonneg_integer_solutions(eqs, nv, cap):
    """Nonnegative integer solutions of an exact linear system, found by
    rational row reduction followed by bounded enumeration of the frees."""
    rows = [list(c) + [r] for c, r in eqs]
    pivots = []
    rank = 0
    for col in range(nv):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(rows)):
        if rows[i][nv]:
            return
    free = [c for c in range(nv) if c not in pivots]

    # per-free interval tightening from rows touching a single free column
    los = {f: 0 for f in free}
    his = {f: cap for f in free}
    for r, col in zip(rows[:rank], pivots):
        touched = [f for f in free if r[f]]
        if len(touched) == 1:
            f = touched[0]
            c, d = r[nv], -r[f]  # pivot value = c + d * x_f >= 0
            if d > 0:
                los[f] = max(los[f], math.ceil(-c / d))
            elif d < 0:
                his[f] = min(his[f], math.floor(-c / d))

    combos = 1
    for f in free:
        combos *= max(his[f] - los[f] + 1, 0)
        if combos > 5_000_000:
            raise NoSolution("free-coefficient search space too large")

    def emit(values):
        assign = [None] * nv
        for f, v in zip(free, values):
            assign[f] = v
        for r, col in zip(rows[:rank], pivots):
            val = r[nv] - sum(r[f] * assign[f] for f in free)
            if val.denominator != 1 or val < 0:
                return None
            assign[col] = int(val)
        return assign

    def rec(i, chosen, used):
        if i == len(free):
            assign = emit(chosen)
            if assign is not None:
                yield assign
            return
        f = free[i]
        for v in range(los[f], min(his[f], cap - used) + 1):
            yield from rec(i + 1, chosen + [v], used + v)

    yield from rec(0, [], 0)


@dataclass(frozen=True)
class Design:
    point_count: int
    blocks: tuple

    @classmethod
    def from_blocks(cls, v, blocks):
        return cls(v, tuple(tuple(sorted(b)) for b in blocks))


def weight_words_design(code: ZkCode, w: int) -> Design:
    """Blocks are the supports of the weight-w codewords."""
    blocks = []
    for word in code.words():
        support = tuple(i for i, x in enumerate(word) if x)
        if len(support) == w:
            blocks.append(support)
    blocks.sort()
    return Design(code.length, tuple(blocks))


def is_2_design(design: Design):
    """The common pair-multiplicity lambda, or None if not a 2-design."""
    if not design.blocks:
        return None
    sizes = {len(b) for b in design.blocks}
    if len(sizes) != 1:
        return None
    counts = {}
    for block in design.blocks:
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                counts[(block[a], block[b])] = counts.get((block[a], block[b]), 0) + 1
    v = design.point_count
    if len(counts) != v * (v - 1) // 2:
        return None
    values = set(counts.values())
    if len(values) != 1:
        return None
    return values.pop()
