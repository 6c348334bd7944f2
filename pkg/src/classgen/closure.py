"""Closure enumeration and certification against the classical order formulas.

closure() runs a breadth-first search from the identity, right-multiplying
the frontier by each generator and keying the visited set on canonical byte
encodings.  Only encodings are stored beyond the frontier, so memory is one
key per element.  The search stops when the frontier empties (exact count)
or the visited set grows past the cap (truncated).  The result depends only
on the generator set, not on ordering or duplicates.

certify() combines the membership predicates, the exact theoretical order
and the closure count into a PASS / FAIL / INDETERMINATE verdict, where
INDETERMINATE means the cap truncated the search.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from classgen._kernels import resolve_backend, right_multiply_batch
from classgen.families import Family, GroupSpec, case_label, generator_pair, is_member
from classgen.matrix import Mat

DEFAULT_CAP = 2_000_000


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class ClosureResult:
    size: int
    truncated: bool
    frontier_rounds: int


@dataclass(frozen=True)
class Certificate:
    spec: GroupSpec
    membership_ok: bool
    expected_order: int
    closure: ClosureResult
    verdict: Verdict


def theoretical_order(spec: GroupSpec) -> int:
    """Exact order of the group named by spec, as a Python integer."""
    case_label(spec)  # reject uncovered parameters the same way the builders do
    fam, deg, q = spec.family, spec.degree, spec.q
    if fam is Family.GL:
        return math.prod(q**deg - q**i for i in range(deg))
    if fam is Family.SL:
        return math.prod(q**deg - q**i for i in range(deg)) // (q - 1)
    if fam is Family.SP:
        n = deg // 2
        return q**(n * n) * math.prod(q**(2 * i) - 1 for i in range(1, n + 1))
    gu = q**(deg * (deg - 1) // 2) * math.prod(q**i - (-1)**i for i in range(1, deg + 1))
    if fam is Family.GU:
        return gu
    if fam is Family.SU:
        return gu // (q + 1)
    raise AssertionError(f"unhandled family {fam}")


def _prepare(gens: list[Mat], cap: int):
    if not gens:
        raise ValueError("need at least one generator")
    if int(cap) != cap or cap < 1:
        raise ValueError(f"cap must be a positive integer, got {cap}")
    ctx = gens[0].ctx
    n = gens[0].n
    for g in gens:
        if g.ctx != ctx or g.n != n:
            raise ValueError("generators must share one field and one degree")
        if not g.det():
            raise ValueError("generators must be invertible")
    return ctx, n


def _batch_keys(batch: np.ndarray, digit_rows: np.ndarray, n: int) -> list[bytes]:
    """Canonical encodings of a (B, n, n) batch, matching Mat.encode_canonical."""
    flat = digit_rows[batch.reshape(batch.shape[0], n * n)]
    payload = flat.reshape(batch.shape[0], -1)
    head = np.full((batch.shape[0], 1), n, dtype=np.uint8)
    rows = np.hstack([head, payload])
    return [row.tobytes() for row in rows]


def _closure_impl(gens: list[Mat], cap: int, backend: str | None, collect: bool):
    ctx, n = _prepare(gens, cap)
    backend = resolve_backend(backend)
    add_t, mul_t = ctx.tables()
    digit_rows = ctx.digit_bytes_table()
    gen_arrays = [np.ascontiguousarray(g.codes, dtype=np.uint16) for g in gens]

    ident = np.zeros((1, n, n), dtype=np.uint16)
    for i in range(n):
        ident[0, i, i] = 1
    visited = set(_batch_keys(ident, digit_rows, n))
    elements = [Mat.identity(ctx, n)] if collect else None

    frontier = ident
    rounds = 0
    truncated = False
    while frontier.shape[0] and not truncated:
        fresh_arrays = []
        for garr in gen_arrays:
            prod = right_multiply_batch(frontier, garr, add_t, mul_t, backend)
            keys = _batch_keys(prod, digit_rows, n)
            fresh_idx = []
            for idx, key in enumerate(keys):
                if key not in visited:
                    visited.add(key)
                    fresh_idx.append(idx)
            if fresh_idx:
                picked = prod[fresh_idx]
                fresh_arrays.append(picked)
                if collect:
                    for row in picked:
                        elements.append(Mat(ctx, row.astype(np.int64)))
            if len(visited) > cap:
                truncated = True
                break
        if fresh_arrays:
            rounds += 1
            frontier = np.concatenate(fresh_arrays, axis=0)
        else:
            frontier = np.empty((0, n, n), dtype=np.uint16)
    return ClosureResult(len(visited), truncated, rounds), elements


def closure(gens: list[Mat], cap: int = DEFAULT_CAP, backend: str | None = None) -> ClosureResult:
    """Breadth-first closure of the generated group; see the module docstring."""
    result, _ = _closure_impl(gens, cap, backend, collect=False)
    return result


def group_elements(gens: list[Mat], cap: int = DEFAULT_CAP,
                   backend: str | None = None) -> list[Mat]:
    """All elements of the generated group in discovery order (identity first).

    Raises ValueError if the cap truncates the search.
    """
    result, elements = _closure_impl(gens, cap, backend, collect=True)
    if result.truncated:
        raise ValueError(f"cap {cap} truncated the enumeration at {result.size} elements")
    return elements


def certify(spec: GroupSpec, cap: int = DEFAULT_CAP, backend: str | None = None) -> Certificate:
    """Certify the generator pair for spec against the theoretical group order."""
    pair = generator_pair(spec)
    membership_ok = (bool(pair.a.det()) and bool(pair.b.det())
                     and is_member(spec, pair.a) and is_member(spec, pair.b))
    expected = theoretical_order(spec)
    result = closure([pair.a, pair.b], cap=cap, backend=backend)
    if not membership_ok:
        verdict = Verdict.FAIL
    elif result.truncated:
        verdict = Verdict.INDETERMINATE
    elif result.size == expected:
        verdict = Verdict.PASS
    else:
        verdict = Verdict.FAIL
    return Certificate(spec, membership_ok, expected, result, verdict)
