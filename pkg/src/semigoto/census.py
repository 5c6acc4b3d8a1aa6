"""Semigroup enumeration and tabulated classification runs.

The genus-bounded census walks the semigroup tree in pre-order (children are
obtained by removing a minimal generator larger than the Frobenius number).
The heavy lifting happens in the compiled kernel; this module handles
filters, record assembly, output sinks and worker distribution.
"""

from __future__ import annotations

import ast
import csv
import json
import math
import multiprocessing
import operator
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import IO, Callable, Dict, Iterator, List, Optional, Sequence

import numpy as np

from . import _kernel
from .errors import ParamError, SemigroupError
from .semigroup import NumericalSemigroup, from_generators, whole


def enumerate_by_genus(g_max: int) -> Iterator[NumericalSemigroup]:
    """Every semigroup of genus <= g_max exactly once, in tree pre-order."""
    if g_max < 0:
        return
    stack = [whole()]
    while stack:
        sg = stack.pop()
        yield sg
        if sg.genus < g_max:
            stack.extend(reversed(sg.children()))


def brute_force_counts(g_max: int) -> List[int]:
    """Semigroup counts per genus from gap sets; every gap lies below twice the genus."""
    counts = []
    for genus in range(g_max + 1):
        total = 0
        for gaps in combinations(range(1, 2 * genus), genus):
            gapset = set(gaps)
            members = [x for x in range(1, 2 * genus) if x not in gapset]
            if all((x + y) not in gapset for x in members for y in members if x <= y):
                total += 1
        counts.append(total)
    return counts


def three_generated(f_max: int, nonsymmetric: bool = True) -> List[NumericalSemigroup]:
    """Minimally 3-generated semigroups with Frobenius number at most f_max."""
    out = []
    a1 = 3
    while True:
        # past this point the least admissible triple already violates the Davison bound
        if 3 * a1 * a1 > 4 * (a1 + f_max) and math.sqrt(3 * a1 * (a1 + 1) * (a1 + 2)) - (3 * a1 + 3) > f_max:
            break
        for a2 in range(a1 + 1, f_max + a1 + 1):
            for a3 in range(a2 + 1, f_max + a1 + 1):
                if math.sqrt(3 * a1 * a2 * a3) - (a1 + a2 + a3) > f_max:
                    continue
                if gcd(gcd(a1, a2), a3) != 1:
                    continue
                sg = from_generators([a1, a2, a3])
                if sg.embedding_dim != 3 or sg.frobenius > f_max:
                    continue
                if nonsymmetric and sg.cm_type == 1:
                    continue
                out.append(sg)
        a1 += 1
    return out


def e3_min_mult(f_max: int) -> List[NumericalSemigroup]:
    """Semigroups of multiplicity and embedding dimension 3 with Frobenius number at most f_max."""
    out = []
    for second in range(4, f_max + 4):
        if second % 3 != 1:
            continue
        for third in range(5, f_max + 4):
            if third % 3 != 2:
                continue
            sg = from_generators([3, second, third])
            if sg.embedding_dim == 3 and sg.frobenius <= f_max:
                out.append(sg)
    return sorted(out, key=lambda sg: sg.generators)


# filter expressions

ALIASES = {
    "e": "multiplicity",
    "v": "embedding_dim",
    "f": "frobenius",
    "g": "genus",
    "r": "cm_type",
    "n": "goto_rank",
    "goto": "is_goto",
}

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
}
_CMPOPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
}


class FilterError(SemigroupError):
    pass


def derived_columns(cols: np.ndarray) -> Dict[str, np.ndarray]:
    """Named column views plus the boolean flags used by filters and records."""
    named = {name: cols[:, i].astype(np.int64) for i, name in enumerate(_kernel.COLUMNS)}
    rank = named["goto_rank"]
    named["gorenstein"] = named["cm_type"] == 1
    named["ag"] = (named["is_goto"] == 1) & (rank <= 1)
    named["two_agl"] = rank == 2
    named["e1"] = np.where(named["is_goto"] == 1, rank + named["len_K_over_R"], -1)
    return named


def compile_filter(expr: Optional[str]) -> Callable[[Dict[str, np.ndarray]], np.ndarray]:
    """Turn EXPR into a vectorized predicate over named columns; only arithmetic, comparisons and boolean logic."""
    if expr is None or not expr.strip():
        return lambda named: np.ones(len(named["genus"]), dtype=bool)
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise FilterError(f"cannot parse filter {expr!r}: {exc.msg}") from exc

    def ev(node, named):
        if isinstance(node, ast.Expression):
            return ev(node.body, named)
        if isinstance(node, ast.BoolOp):
            vals = [np.asarray(ev(operand, named)).astype(bool) for operand in node.values]
            op = np.logical_and if isinstance(node.op, ast.And) else np.logical_or
            out = vals[0]
            for operand in vals[1:]:
                out = op(out, operand)
            return out
        if isinstance(node, ast.UnaryOp):
            val = ev(node.operand, named)
            if isinstance(node.op, ast.Not):
                return np.logical_not(np.asarray(val).astype(bool))
            if isinstance(node.op, ast.USub):
                return -val
            raise FilterError("unsupported unary operator")
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left, named), ev(node.right, named))
        if isinstance(node, ast.Compare):
            left = ev(node.left, named)
            out = None
            for op, comp in zip(node.ops, node.comparators):
                if type(op) not in _CMPOPS:
                    raise FilterError("unsupported comparison")
                right = ev(comp, named)
                part = _CMPOPS[type(op)](left, right)
                out = part if out is None else np.logical_and(out, part)
                left = right
            return out
        if isinstance(node, ast.Name):
            key = ALIASES.get(node.id, node.id)
            if key not in named:
                raise FilterError(f"unknown name {node.id!r} in filter")
            return named[key]
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, bool)):
            return int(node.value)
        raise FilterError(f"unsupported syntax in filter: {ast.dump(node)}")

    # validate names once against an empty chunk
    probe = derived_columns(np.zeros((0, _kernel.NCOL), dtype=np.int32))
    ev(tree, probe)

    def predicate(named):
        out = np.asarray(ev(tree, named))
        if out.shape == ():
            out = np.full(len(named["genus"]), bool(out))
        return out.astype(bool)

    return predicate


# records

RECORD_FIELDS = (
    "generators", "genus", "frobenius", "multiplicity", "embedding_dim", "cm_type",
    "goto_rank", "gorenstein", "ag", "two_agl", "ggl", "min_mult", "arf",
    "len_K_over_R", "len_R_over_c", "e1", "v_R_over_c", "t", "s",
)
# short output keys backed by descriptive attributes
_FIELD_ATTR = {"t": "socle_degree", "s": "sally_counts"}


@dataclass
class CensusRecord:
    generators: List[int]
    genus: int
    frobenius: int
    multiplicity: int
    embedding_dim: int
    cm_type: int
    goto_rank: Optional[int]
    gorenstein: bool
    ag: bool
    two_agl: bool
    ggl: Optional[bool]
    min_mult: bool
    arf: bool
    len_K_over_R: int
    len_R_over_c: int
    e1: Optional[int]
    v_R_over_c: int
    socle_degree: Optional[int]
    sally_counts: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {name: getattr(self, _FIELD_ATTR.get(name, name)) for name in RECORD_FIELDS}

    def csv_row(self) -> List[object]:
        row = []
        for name in RECORD_FIELDS:
            value = getattr(self, _FIELD_ATTR.get(name, name))
            if isinstance(value, list):
                value = " ".join(map(str, value))
            elif value is None:
                value = ""
            row.append(value)
        return row


def record_from_row(mask: int, row: Sequence[int], sally: Sequence[int]) -> CensusRecord:
    col = _kernel.COL
    cond = int(row[col["conductor"]])
    sg = NumericalSemigroup.from_mask(int(mask), cond)
    rank = int(row[col["goto_rank"]])
    goto = rank >= 0
    socle = int(row[col["t"]])
    ggl = int(row[col["ggl"]])
    return CensusRecord(
        generators=list(sg.generators),
        genus=int(row[col["genus"]]),
        frobenius=int(row[col["frobenius"]]),
        multiplicity=int(row[col["multiplicity"]]),
        embedding_dim=int(row[col["embedding_dim"]]),
        cm_type=int(row[col["cm_type"]]),
        goto_rank=rank if goto else None,
        gorenstein=int(row[col["cm_type"]]) == 1,
        ag=goto and rank <= 1,
        two_agl=rank == 2,
        ggl=None if ggl < 0 else bool(ggl),
        min_mult=bool(row[col["min_mult"]]),
        arf=bool(row[col["arf"]]),
        len_K_over_R=int(row[col["len_K_over_R"]]),
        len_R_over_c=int(row[col["len_R_over_c"]]),
        e1=rank + int(row[col["len_K_over_R"]]) if goto else None,
        v_R_over_c=int(row[col["v_R_over_c"]]),
        socle_degree=socle if socle >= 0 else None,
        sally_counts=[int(x) for x in sally[: socle + 1]] if socle >= 0 else [],
    )


def classify_record(sg: NumericalSemigroup) -> CensusRecord:
    """Record built from a fresh kernel run on one semigroup (round-trip reference)."""
    row, sally = _kernel.analyze_one(sg.mask, sg.conductor, sg.genus)
    full = (sg.mask | ~((1 << sg.conductor) - 1)) & 0xFFFFFFFFFFFFFFFF
    return record_from_row(full, row, sally)


# scanning

def scan(g_max: int, f_max: Optional[int] = None, e_max: Optional[int] = None, chunk: int = 100_000):
    """Yield (masks, columns, s-vectors) chunks for every semigroup within the bounds."""
    yield from _kernel.Scanner(g_max, f_max, e_max, chunk=chunk)


def _frontier_tasks(g_max: int, f_max: Optional[int], e_max: Optional[int], depth: int):
    """Pre-order task list: shallow nodes individually, nodes at ``depth`` as whole subtrees."""
    f_cap = 2 * _kernel.MAX_GENUS if f_max is None else f_max
    e_cap = 64 if e_max is None else e_max
    tasks = []
    stack = [whole()]
    while stack:
        sg = stack.pop()
        full = (sg.mask | ~((1 << sg.conductor) - 1)) & 0xFFFFFFFFFFFFFFFF
        if sg.genus >= depth or sg.genus >= g_max:
            tasks.append((full, sg.conductor, sg.genus, g_max))
            continue
        tasks.append((full, sg.conductor, sg.genus, sg.genus))
        kids = [
            child for child in sg.children()
            if child.frobenius <= f_cap and child.multiplicity <= e_cap
        ]
        stack.extend(reversed(kids))
    return tasks


def _run_task(args):
    (mask, cond, genus, bound), f_max, e_max, expr = args
    predicate = compile_filter(expr)
    records = []
    scanned = 0
    scanner = _kernel.Scanner(bound, f_max, e_max, roots=[(mask, cond, genus)])
    for masks, cols, sally_block in scanner:
        scanned += len(masks)
        keep = predicate(derived_columns(cols))
        for i in np.flatnonzero(keep):
            records.append(record_from_row(int(masks[i]), cols[i], sally_block[i]))
    return scanned, records


@dataclass
class CensusSummary:
    scanned: int
    matched: int
    rank_histogram: Dict[str, int]

    def to_dict(self) -> Dict[str, object]:
        return {"scanned": self.scanned, "matched": self.matched, "rank_histogram": self.rank_histogram}


def iter_records(
    g_max: int,
    expr: Optional[str] = None,
    f_max: Optional[int] = None,
    e_max: Optional[int] = None,
    workers: int = 1,
    stats: Optional[Counter] = None,
) -> Iterator[CensusRecord]:
    """Filtered records in tree pre-order; ``stats['scanned']`` counts everything visited."""
    stats = Counter() if stats is None else stats
    if workers <= 1:
        predicate = compile_filter(expr)
        for masks, cols, sally_block in scan(g_max, f_max, e_max):
            stats["scanned"] += len(masks)
            keep = predicate(derived_columns(cols))
            for i in np.flatnonzero(keep):
                yield record_from_row(int(masks[i]), cols[i], sally_block[i])
        return
    compile_filter(expr)  # report bad filters before spawning workers
    depth = min(g_max, 8)
    tasks = [(task, f_max, e_max, expr) for task in _frontier_tasks(g_max, f_max, e_max, depth)]
    with multiprocessing.Pool(workers) as pool:
        for scanned, records in pool.imap(_run_task, tasks, chunksize=4):
            stats["scanned"] += scanned
            yield from records


def run_census(
    sink: IO[str],
    g_max: int,
    expr: Optional[str] = None,
    fmt: str = "jsonl",
    f_max: Optional[int] = None,
    e_max: Optional[int] = None,
    workers: int = 1,
) -> CensusSummary:
    """Write one record per matching semigroup to ``sink`` and return the summary."""
    if fmt not in ("jsonl", "csv"):
        raise ParamError(f"unknown census format {fmt!r}")
    writer = csv.writer(sink) if fmt == "csv" else None
    if writer is not None:
        writer.writerow(RECORD_FIELDS)
    stats: Counter = Counter()
    hist: Counter = Counter()
    matched = 0
    for rec in iter_records(g_max, expr, f_max, e_max, workers, stats):
        matched += 1
        hist["none" if rec.goto_rank is None else str(rec.goto_rank)] += 1
        if writer is not None:
            writer.writerow(rec.csv_row())
        else:
            sink.write(json.dumps(rec.to_dict()) + "\n")
    ordered = dict(sorted(hist.items(), key=lambda kv: (kv[0] == "none", int(kv[0]) if kv[0] != "none" else 0)))
    return CensusSummary(stats["scanned"], matched, ordered)
