"""Batched matrix products over small fields: numba kernel, numpy fallback.

The closure enumeration multiplies whole frontiers of matrices by one
generator at a time, with field arithmetic done through (q, q) lookup
tables.  Two interchangeable implementations exist:

  numba   a jitted triple loop (default when numba imports)
  numpy   pure-numpy gather-and-fold over the shared index l

Select with the CLASSGEN_BACKEND environment variable (numba or numpy) or
per call.  Both produce identical arrays; benchmarks/closure_bench.py
compares their speed.
"""

from __future__ import annotations

import os

import numpy as np

BACKEND_ENV = "CLASSGEN_BACKEND"

_numba_kernel = None
_numba_checked = False


def _load_numba_kernel():
    """Compile-on-first-use so plain CLI paths never pay the numba import."""
    global _numba_kernel, _numba_checked
    if _numba_checked:
        return _numba_kernel
    _numba_checked = True
    try:
        import numba
    except ImportError:
        return None

    @numba.njit(cache=True)
    def kernel(batch, gen, add_tab, mul_tab, out):  # pragma: no cover - jitted
        nb = batch.shape[0]
        n = batch.shape[1]
        for b in range(nb):
            for i in range(n):
                for j in range(n):
                    acc = mul_tab[batch[b, i, 0], gen[0, j]]
                    for l in range(1, n):
                        acc = add_tab[acc, mul_tab[batch[b, i, l], gen[l, j]]]
                    out[b, i, j] = acc

    _numba_kernel = kernel
    return _numba_kernel


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if _load_numba_kernel() is not None else ("numpy",)


def resolve_backend(name: str | None = None) -> str:
    """Pick the backend: explicit argument, else CLASSGEN_BACKEND, else numba."""
    if name is None:
        name = os.environ.get(BACKEND_ENV, "").strip().lower() or None
    if name is None:
        return "numba" if _load_numba_kernel() is not None else "numpy"
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; use numba or numpy")
    if name == "numba" and _load_numba_kernel() is None:
        raise ValueError("backend numba requested but numba is not importable")
    return name


def _right_multiply_numpy(batch, gen, add_tab, mul_tab):
    n = batch.shape[1]
    acc = mul_tab[batch[:, :, 0][:, :, None], gen[0, :][None, None, :]]
    for l in range(1, n):
        term = mul_tab[batch[:, :, l][:, :, None], gen[l, :][None, None, :]]
        acc = add_tab[acc, term]
    return acc


def right_multiply_batch(batch: np.ndarray, gen: np.ndarray,
                         add_tab: np.ndarray, mul_tab: np.ndarray,
                         backend: str | None = None) -> np.ndarray:
    """out[b] = batch[b] @ gen over the field encoded by the tables.

    batch is (B, n, n) uint16 codes, gen is (n, n) uint16 codes.
    """
    backend = resolve_backend(backend)
    if backend == "numba":
        out = np.empty_like(batch)
        _numba_kernel(batch, gen, add_tab, mul_tab, out)
        return out
    return _right_multiply_numpy(batch, gen, add_tab, mul_tab)
