"""Compiled census kernel over 64-bit membership masks.

A semigroup of conductor c <= 62 is a uint64 whose bit x says whether x is a
member; bits from c upward are always set.  Every ideal handled here (K, its
powers, the hull, the conductor ideal, Sally layers) lies in N and contains
[c, oo), so it fits the same encoding.  Integers past bit 63 are members of all
of them.

Products use generator shifts: K * X is the union of X << (f - p) over PF and
M * X the union of X << a over the minimal generators.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_GENUS = 31  # keeps c <= 2g <= 62
SLOTS = 32  # Sally s-vector width
STACK = 4096
SCRATCH = 64

ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
ONE = np.uint64(1)
ZERO = np.uint64(0)
M1 = np.uint64(0x5555555555555555)
M2 = np.uint64(0x3333333333333333)
M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
H01 = np.uint64(0x0101010101010101)

COLUMNS = (
    "conductor", "genus", "frobenius", "multiplicity", "embedding_dim", "cm_type",
    "is_goto", "goto_rank", "len_K_over_R", "len_R_over_c", "mu_K2_over_K", "v_R_over_c",
    "rc_gorenstein", "ggl", "red", "a", "L1", "L2", "L3", "L4", "L5", "L6", "t",
    "min_mult", "blow_rank", "arf", "ag_def",
)
COL = {name: i for i, name in enumerate(COLUMNS)}
NCOL = len(COLUMNS)

C_COND, C_GENUS, C_FROB, C_MULT, C_EMB, C_TYPE = 0, 1, 2, 3, 4, 5
C_GOTO, C_RANK, C_LKR, C_LRC, C_MU, C_VRC = 6, 7, 8, 9, 10, 11
C_RCGOR, C_GGL, C_RED, C_A, C_L1, C_T = 12, 13, 14, 15, 16, 22
C_MINMULT, C_BLOW, C_ARF, C_AGDEF = 23, 24, 25, 26


@njit(cache=True)
def _low(count):
    if count <= 0:
        return ZERO
    if count >= 64:
        return ALL
    return (ONE << np.uint64(count)) - ONE


@njit(cache=True)
def _high(count):
    return ALL ^ _low(count)


@njit(cache=True)
def _has(word, x):
    if x < 0:
        return False
    if x >= 64:
        return True
    return ((word >> np.uint64(x)) & ONE) == ONE


@njit(cache=True)
def _shl(word, k):
    if k >= 64:
        return ZERO
    return word << np.uint64(k)


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> ONE) & M1)
    x = (x & M2) + ((x >> np.uint64(2)) & M2)
    x = (x + (x >> np.uint64(4))) & M4
    return np.int64((x * H01) >> np.uint64(56))


@njit(cache=True)
def _conductor(word):
    gaps = ~word
    count = 0
    while gaps != ZERO:
        gaps >>= ONE
        count += 1
    return count


@njit(cache=True)
def _shift_union(src, shifts, k, cond):
    acc = ZERO
    for i in range(k):
        acc |= _shl(src, shifts[i])
    return acc | _high(cond)


@njit(cache=True)
def _structure(sg, cond, gens, pf):
    """Multiplicity, embedding dimension and type; fills minimal generators and PF."""
    if cond == 0:
        gens[0] = 1
        return 1, 1, 0
    mult = 1
    while not _has(sg, mult):
        mult += 1
    apery = np.empty(SCRATCH, dtype=np.int64)
    for i in range(mult):
        x = i
        while not _has(sg, x):
            x += mult
        apery[i] = x
    edim = 1
    gens[0] = mult
    ntype = 0
    for i in range(1, mult):
        elem = apery[i]
        minimal = True
        maximal = True
        for j in range(1, mult):
            if j == i:
                continue
            other = apery[j]
            if other < elem and _has(sg, elem - other):
                minimal = False
            if other > elem and _has(sg, other - elem):
                maximal = False
        if minimal:
            gens[edim] = elem
            edim += 1
        if maximal:
            pf[ntype] = elem - mult
            ntype += 1
    # Apery elements come by residue; sort generators for determinism
    gens[:edim].sort()
    pf[:ntype].sort()
    return mult, edim, ntype


@njit(cache=True)
def _goto_rank(sg, cond):
    """Goto rank of a semigroup given only by its mask, or -1 when K^2 != K^3."""
    gens = np.empty(SCRATCH, dtype=np.int64)
    pf = np.empty(SCRATCH, dtype=np.int64)
    mult, edim, ntype = _structure(sg, cond, gens, pf)
    if ntype <= 1:
        return 0
    frob = cond - 1
    shifts = np.empty(SCRATCH, dtype=np.int64)
    for i in range(ntype):
        shifts[i] = frob - pf[i]
    canon = _shift_union(sg, shifts, ntype, cond)
    K2 = _shift_union(canon, shifts, ntype, cond)
    K3 = _shift_union(K2, shifts, ntype, cond)
    if K3 != K2:
        return -1
    return _popcount(K2 & ~canon)


@njit(cache=True)
def _is_arf(sg, cond):
    gens = np.empty(SCRATCH, dtype=np.int64)
    pf = np.empty(SCRATCH, dtype=np.int64)
    while cond > 0:
        mult, edim, ntype = _structure(sg, cond, gens, pf)
        if mult != edim:
            return False
        sg = (sg >> np.uint64(mult)) | _high(cond - mult)
        cond = _conductor(sg)
    return True


@njit(cache=True)
def analyze(sg, cond, genus, row, S_row, gens, pf):
    """Fill one output row; returns the embedding dimension (gens holds the generators)."""
    mult, edim, ntype = _structure(sg, cond, gens, pf)
    frob = cond - 1
    row[C_COND] = cond
    row[C_GENUS] = genus
    row[C_FROB] = frob
    row[C_MULT] = mult
    row[C_EMB] = edim
    row[C_TYPE] = max(ntype, 1)
    for i in range(SLOTS):
        S_row[i] = 0
    maximal = sg & ~ONE
    shifts = np.empty(SCRATCH, dtype=np.int64)
    if ntype <= 1:
        shifts[0] = 0
        nsh = 1
    else:
        for i in range(ntype):
            shifts[i] = frob - pf[i]
        nsh = ntype
    canon = _shift_union(sg, shifts, nsh, cond)
    powers = np.empty(64, dtype=np.uint64)
    powers[0] = sg
    powers[1] = canon
    red = 0
    k = 1
    if canon != sg:
        while True:
            nxt = _shift_union(powers[k], shifts, nsh, cond)
            if nxt == powers[k]:
                break
            k += 1
            powers[k] = nxt
        red = k
    # powers[red] is the hull; the Hilbert lengths need K^m for m <= 6
    top = red
    K2 = powers[min(2, top)]
    hull = powers[top]
    goto = red <= 2
    rank = _popcount(K2 & ~canon) if goto else -1
    row[C_GOTO] = 1 if goto else 0
    row[C_RANK] = rank
    row[C_RED] = red
    len_kr = _popcount(canon & ~sg)
    row[C_LKR] = len_kr
    # conductor ideal R : S
    cond_ideal = _high(cond)
    for x in range(cond):
        if (_shl(hull, x) & ~sg) == ZERO:
            cond_ideal |= ONE << np.uint64(x)
    row[C_LRC] = _popcount(sg & ~cond_ideal)
    gshift = np.empty(SCRATCH, dtype=np.int64)
    for i in range(edim):
        gshift[i] = gens[i]
    MK2 = _shift_union(K2, gshift, edim, cond)
    row[C_MU] = _popcount(K2 & ~(MK2 | canon))
    v_rc = 0
    for i in range(edim):
        if not _has(cond_ideal, gens[i]):
            v_rc += 1
    row[C_VRC] = v_rc
    outside = sg & ~cond_ideal
    rc_gor = True
    if outside != ZERO:
        socle_count = 0
        for x in range(cond):
            if _has(outside, x):
                ok = True
                for i in range(edim):
                    if not _has(cond_ideal, x + gens[i]):
                        ok = False
                        break
                if ok:
                    socle_count += 1
        rc_gor = socle_count == 1
    row[C_RCGOR] = 1 if rc_gor else 0
    cm_type = max(ntype, 1)
    if cm_type == 1:
        ggl = 1
    elif not goto or not rc_gor:
        ggl = 0
    elif rank == 1 or cm_type == 2:
        ggl = 1
    elif v_rc == 1:
        ggl = 1 if len_kr == rank * (cm_type - 1) else 0
    else:
        ggl = -1
    row[C_GGL] = ggl
    # least shift moving the canonical ideal inside the ring
    lift = 1
    while (_shl(canon, lift) & ~sg) != ZERO:
        lift += 1
    row[C_A] = lift
    for exp in range(1, 7):
        layer = powers[min(exp, top)]
        offset = exp * lift
        total = offset - _popcount(~sg & _low(min(offset, 64)))
        for y in range(cond):
            if not _has(layer, y) and _has(sg, offset + y):
                total += 1
        row[C_L1 + exp - 1] = total
    # Sally layers: successive maximal-ideal multiples of K^2
    socle_degree = -1
    if goto and rank >= 1:
        counts = np.zeros(SLOTS, dtype=np.int64)
        layer = K2
        j = 0
        while (layer & ~canon) != ZERO:
            Pn = _shift_union(layer, gshift, edim, cond)
            counts[j] = _popcount(layer & ~(Pn | canon))
            layer = Pn
            j += 1
        socle_degree = j - 1
        for i in range(socle_degree + 1):
            S_row[i] = counts[socle_degree - i]
    row[C_T] = socle_degree
    mm = mult == edim
    row[C_MINMULT] = 1 if mm else 0
    blow = -2
    arf = 0
    if mm:
        if cond > 0:
            blown = (sg >> np.uint64(mult)) | _high(cond - mult)
            blow = _goto_rank(blown, _conductor(blown))
        else:
            blow = 0
        arf = 1 if _is_arf(sg, cond) else 0
    row[C_BLOW] = blow
    row[C_ARF] = arf
    MK = _shift_union(canon, gshift, edim, cond)
    row[C_AGDEF] = 1 if (MK & ~maximal) == ZERO else 0
    return edim


@njit(cache=True)
def fill(stack_mask, stack_c, stack_g, sp_arr, g_max, f_max, e_max, out_mask, out_cols, out_s):
    """Pop nodes off the explicit DFS stack until the output buffers are full.

    Children are pushed in reverse so that pre-order visits smaller removed
    generators first.  Returns the number of rows written.
    """
    rows_cap = out_mask.shape[0]
    gens = np.empty(SCRATCH, dtype=np.int64)
    pf = np.empty(SCRATCH, dtype=np.int64)
    sp = sp_arr[0]
    count = 0
    while sp > 0 and count < rows_cap:
        sp -= 1
        sg = stack_mask[sp]
        cond = stack_c[sp]
        genus = stack_g[sp]
        out_mask[count] = sg
        edim = analyze(sg, cond, genus, out_cols[count], out_s[count], gens, pf)
        mult = out_cols[count, C_MULT]
        count += 1
        if genus >= g_max:
            continue
        frob = cond - 1
        for i in range(edim - 1, -1, -1):
            x = gens[i]
            if x <= frob or x > f_max:
                continue
            if x == mult and mult + 1 > e_max:
                continue
            stack_mask[sp] = sg & ~(ONE << np.uint64(x))
            stack_c[sp] = x + 1
            stack_g[sp] = genus + 1
            sp += 1
    sp_arr[0] = sp
    return count


class Scanner:
    """Resumable pre-order traversal of the semigroup tree, yielding column chunks."""

    def __init__(self, g_max, f_max=None, e_max=None, roots=None, chunk=100_000):
        if g_max > MAX_GENUS:
            raise ValueError(f"the compiled kernel supports genus up to {MAX_GENUS}")
        self.g_max = int(g_max)
        self.f_max = int(2 * MAX_GENUS if f_max is None else f_max)
        self.e_max = int(64 if e_max is None else e_max)
        self.chunk = int(chunk)
        self.stack_mask = np.zeros(STACK, dtype=np.uint64)
        self.stack_c = np.zeros(STACK, dtype=np.int64)
        self.stack_g = np.zeros(STACK, dtype=np.int64)
        roots = [(int(ALL), 0, 0)] if roots is None else list(roots)
        for i, (mask, cond, genus) in enumerate(reversed(roots)):
            self.stack_mask[i] = np.uint64(mask)
            self.stack_c[i] = cond
            self.stack_g[i] = genus
        self.sp = np.array([len(roots)], dtype=np.int64)

    def __iter__(self):
        while self.sp[0] > 0:
            out_mask = np.zeros(self.chunk, dtype=np.uint64)
            out_cols = np.zeros((self.chunk, NCOL), dtype=np.int32)
            out_s = np.zeros((self.chunk, SLOTS), dtype=np.int8)
            count = fill(
                self.stack_mask, self.stack_c, self.stack_g, self.sp,
                self.g_max, self.f_max, self.e_max, out_mask, out_cols, out_s,
            )
            yield out_mask[:count], out_cols[:count], out_s[:count]


def analyze_one(mask: int, conductor: int, genus: int):
    """Kernel row for a single semigroup (used for cross-validation)."""
    full = (mask | ~((1 << conductor) - 1)) & 0xFFFFFFFFFFFFFFFF
    row = np.zeros(NCOL, dtype=np.int32)
    sally = np.zeros(SLOTS, dtype=np.int8)
    gens = np.empty(SCRATCH, dtype=np.int64)
    pf = np.empty(SCRATCH, dtype=np.int64)
    analyze(np.uint64(full), conductor, genus, row, sally, gens, pf)
    return row, sally
