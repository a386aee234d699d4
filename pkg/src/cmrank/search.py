"""Superspecial searches: the genus-5 fiber-product sweep and the exhaustive
genus-2 enumeration.

The sweep fixes p = 11 (mod 12) and scans pairs (u, v) over GF(p) - {1, -1}.
The two covers are the Moebius transports of y^2 = x^4 - 1 and z^2 = x^6 - 1
under x -> (x+u)/(ux+1) and x -> (x+v)/(vx+1), so both stay superspecial;
their fiber product is a genus-5 curve whose remaining quotient is the
genus-2 model w^2 = f with

    f = ((x+u)^2 + (ux+1)^2) * ((x+v)^4 + (x+v)^2 (vx+1)^2 + (vx+1)^4),

the transports of the cofactors x^2 + 1 and x^4 + x^2 + 1.  That quotient
has p-rank 0 exactly when the three entry equations

    a*d - b*c = 0,   a*b^(p-1) + d^p = 0,   a^p + c^(p-1)*d = 0

hold for a = c_{p-1}, b = c_{2p-1}, c = c_{p-2}, d = c_{2p-2}, the
coefficients of f^((p-1)/2) forming the 2x2 Cartier-Manin matrix.  The
production path evaluates the entries for a whole grid chunk at once with
numpy: the four needed coefficients sit within p of the ends of the
coefficient range, so a forward and a reversed linear recurrence give them
in O(p) vectorized steps instead of expanding f^((p-1)/2).  A scalar route
through the generic cartier machinery provides the oracle the kernel is
tested against.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .cartier import HyperellipticModel, p_rank, power_coeffs
from .covers import prank_fiber_product
from .ff import FieldElement, field, is_prime
from .poly import DensePoly, _is_rzero, is_squarefree, poly_gcd

DEFAULT_CHUNK_PAIRS = 32768
EXT_GRID_GUARD = 40000
ENUM_GUARD = 1_200_000
SWEEP_MAX_P = 1 << 20  # keeps every int64 accumulation in the kernel exact


@dataclass(frozen=True)
class SweepConfig:
    p: int
    mode: str = "first"
    threads: int = 1
    chunk: int = 0  # u-rows per chunk; 0 picks a size near DEFAULT_CHUNK_PAIRS

    def __post_init__(self):
        if not is_prime(self.p) or self.p % 12 != 11:
            raise ValueError(f"p = {self.p} is not a prime with p = 11 (mod 12)")
        if self.p > SWEEP_MAX_P:
            raise ValueError(f"p = {self.p} exceeds the kernel bound {SWEEP_MAX_P}")
        if self.mode not in ("first", "all"):
            raise ValueError(f"mode must be 'first' or 'all', got {self.mode!r}")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if self.chunk < 0:
            raise ValueError("chunk must be non-negative")


@dataclass
class SearchResult:
    p: int
    mode: str
    solutions: list
    counts: dict
    elapsed_ms: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "mode": self.mode,
            "solutions": [list(s) for s in self.solutions],
            "counts": dict(self.counts),
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SearchResult":
        return cls(
            p=obj["p"],
            mode=obj["mode"],
            solutions=[tuple(s) for s in obj["solutions"]],
            counts=dict(obj["counts"]),
            elapsed_ms=obj["elapsed_ms"],
        )


@dataclass(frozen=True)
class CheckResult:
    status: str  # "solution" | "excluded" | "not_solution"
    reason: str | None = None  # "uv" | "gcd" | "singular" for exclusions
    entries: tuple | None = None  # (a, b, c, d) when computed


def _pair_polys(u: FieldElement, v: FieldElement):
    """The quadratic A = (x+u)^2 + (ux+1)^2 and the sextic-cofactor quartic
    B = (x+v)^4 + (x+v)^2 (vx+1)^2 + (vx+1)^4, the Moebius transports of
    x^2 + 1 and x^4 + x^2 + 1."""
    ctx = u.ctx
    one = DensePoly.one(ctx)
    x = DensePoly.x(ctx)
    xu = x + DensePoly.from_elements(ctx, [u])
    ux1 = x.scale(u) + one
    xv = x + DensePoly.from_elements(ctx, [v])
    vx1 = x.scale(v) + one
    a = xu * xu + ux1 * ux1
    b = xv**4 + (xv * vx1) ** 2 + vx1**4
    return a, b


def quotient_polys(u: FieldElement, v: FieldElement):
    """Model polynomials of the two covers E_u, D_v whose fiber product the
    sweep studies: A * ((x+u)^2 - (ux+1)^2) and B * ((x+v)^2 - (vx+1)^2)."""
    ctx = u.ctx
    one = DensePoly.one(ctx)
    x = DensePoly.x(ctx)
    a, b = _pair_polys(u, v)
    xu = x + DensePoly.from_elements(ctx, [u])
    ux1 = x.scale(u) + one
    xv = x + DensePoly.from_elements(ctx, [v])
    vx1 = x.scale(v) + one
    return a * (xu * xu - ux1 * ux1), b * (xv * xv - vx1 * vx1)


def ss5_check_pair(
    p: int, u: FieldElement, v: FieldElement, strategy: str = "auto"
) -> CheckResult:
    """Scalar reference check of one (u, v) pair; the kernel's oracle."""
    if p % 12 != 11:
        raise ValueError(f"p = {p} is not 11 (mod 12)")
    ctx = u.ctx
    if ctx != v.ctx or ctx.p != p:
        raise ValueError("u, v must share a field context of characteristic p")
    one = ctx.one
    if u == one or u == -one or v == one or v == -one:
        return CheckResult(status="excluded", reason="uv")
    a_poly, b_poly = _pair_polys(u, v)
    if poly_gcd(a_poly, b_poly).degree > 0:
        return CheckResult(status="excluded", reason="gcd")
    f = a_poly * b_poly
    if not is_squarefree(f):
        return CheckResult(status="excluded", reason="singular")
    m = (p - 1) // 2
    coeffs = power_coeffs(f, m, {p - 2, p - 1, 2 * p - 2, 2 * p - 1}, strategy)
    a = coeffs[p - 1]
    b = coeffs[2 * p - 1]
    c = coeffs[p - 2]
    d = coeffs[2 * p - 2]
    eq1 = (a * d - b * c).is_zero
    eq2 = (a * b ** (p - 1) + d**p).is_zero
    eq3 = (a**p + c ** (p - 1) * d).is_zero
    status = "solution" if (eq1 and eq2 and eq3) else "not_solution"
    return CheckResult(status=status, entries=(a, b, c, d))


# -- vectorized grid kernel ------------------------------------------------------


def _powmod_vec(base, e: int, p: int):
    r = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


def _inverse_table(p: int):
    inv = np.zeros(p, dtype=np.int64)
    inv[1] = 1
    for k in range(2, p):
        inv[k] = (p - (p // k) * inv[p % k]) % p
    return inv


def _res_quadratics(a2, a1, a0, b2, b1, b0, p):
    """Resultant of a2 x^2 + a1 x + a0 and b2 x^2 + b1 x + b0, vectorized."""
    t1 = (a2 * b0 - a0 * b2) % p
    t2 = (a2 * b1 - a1 * b2) % p
    t3 = (a1 * b0 - a0 * b1) % p
    return (t1 * t1 - t2 * t3) % p


def _recurrence_ends_vec(fs, m: int, p: int, inv_table):
    """c_{p-2} and c_{p-1} of prod-polynomial powers, vectorized over pairs.

    fs is the list [f0..f6] of int64 coefficient arrays with f0 nonzero."""
    f0 = fs[0]
    c_prev = [None] * 6  # c_{k-1} .. c_{k-6}
    c0 = _powmod_vec(f0, m, p)
    inv_f0 = _powmod_vec(f0, p - 2, p)
    c_prev[0] = c0
    zeros = np.zeros_like(f0)
    for j in range(1, 6):
        c_prev[j] = zeros
    out_pm2 = None
    for k in range(1, p):
        acc = np.zeros_like(f0)
        for j in range(1, 7):
            if j > k:
                break
            w = ((m + 1) * j - k) % p
            if w:
                acc += w * fs[j] * c_prev[j - 1]
        ck = acc % p * int(inv_table[k]) % p * inv_f0 % p
        if k == p - 2:
            out_pm2 = ck
        c_prev = [ck] + c_prev[:5]
    return out_pm2, c_prev[0]  # c_{p-2}, c_{p-1}


def _scan_chunk(p: int, us, vs):
    """Evaluate the pair test on the grid chunk us x vs.

    Returns (counts, solutions, fallback_pairs): counts for the chunk,
    lexicographically sorted solutions, and any pairs the kernel could not
    handle (f(0) = 0) for the scalar route to finish."""
    m = (p - 1) // 2
    nu_len = len(vs)
    U = np.repeat(np.asarray(us, dtype=np.int64), nu_len)
    V = np.tile(np.asarray(vs, dtype=np.int64), len(us))

    a0 = (1 + U * U) % p  # A = a0 x^2 + a1 x + a0
    a1 = 4 * U % p
    # B = (x+v)^4 + (x+v)^2 (vx+1)^2 + (vx+1)^4 is palindromic:
    al = (1 + V * V) % p
    b0 = (al * al - V * V) % p  # = v^4 + v^2 + 1
    b1 = 6 * V % p * al % p
    b2 = (V * V % p * V % p * V + 16 * V * V + 1) % p
    b3 = b1
    b4 = b0

    # writing B = (S+T)(S-T) with S, T the transports of x^2+1 and x,
    # gcd(A, B) != 1 iff A shares a root with S+T or S-T
    sp2 = (V * V + V + 1) % p
    sp1 = (V * V + 4 * V + 1) % p
    sm2 = (V * V - V + 1) % p
    sm1 = (4 * V - V * V - 1) % p
    res1 = _res_quadratics(a0, a1, a0, sp2, sp1, sp2, p)
    res2 = _res_quadratics(a0, a1, a0, sm2, sm1, sm2, p)
    excluded_gcd = (res1 == 0) | (res2 == 0)

    # with gcd(A, B) = 1, f = A*B is squarefree iff A and B are; on this
    # grid B is always squarefree (p > 3) and A is squarefree iff u != +-1,
    # which the grid already excludes -- recorded anyway for honesty
    disc_a = (U * U - 1) % p
    excluded_singular = (~excluded_gcd) & (disc_a == 0)

    live = ~(excluded_gcd | excluded_singular)

    # f = A * B, coefficients f0..f6
    f = [
        a0 * b0 % p,
        (a0 * b1 + a1 * b0) % p,
        (a0 * b2 + a1 * b1 + a0 * b0) % p,
        (a0 * b3 + a1 * b2 + a0 * b1) % p,
        (a0 * b4 + a1 * b3 + a0 * b2) % p,
        (a1 * b4 + a0 * b3) % p,
        a0 * b4 % p,
    ]
    fallback = live & (f[0] == 0)
    live = live & ~fallback

    idx = np.flatnonzero(live)
    counts = {
        "tested": int(live.sum() + fallback.sum()),
        "excluded_uv": 0,
        "excluded_gcd": int(excluded_gcd.sum()),
        "excluded_singular": int(excluded_singular.sum()),
    }
    solutions = []
    if idx.size:
        inv_table = _inverse_table(p)
        fs = [arr[idx] for arr in f]
        c, a = _recurrence_ends_vec(fs, m, p, inv_table)
        rev = list(reversed(fs))
        b, d = _recurrence_ends_vec(rev, m, p, inv_table)
        eq1 = (a * d - b * c) % p == 0
        eq2 = (a * _powmod_vec(b, p - 1, p) + _powmod_vec(d, p, p)) % p == 0
        eq3 = (_powmod_vec(a, p, p) + _powmod_vec(c, p - 1, p) * d) % p == 0
        hit = idx[eq1 & eq2 & eq3]
        solutions = sorted((int(U[i]), int(V[i])) for i in hit)
    fallback_pairs = [(int(U[i]), int(V[i])) for i in np.flatnonzero(fallback)]
    return counts, solutions, fallback_pairs


def _process_chunk(p: int, us, vs):
    counts, solutions, fallback_pairs = _scan_chunk(p, us, vs)
    if fallback_pairs:
        ctx = field(p)
        for uu, vv in fallback_pairs:
            r = ss5_check_pair(p, ctx.elem(uu), ctx.elem(vv), strategy="naive")
            if r.status == "solution":
                solutions.append((uu, vv))
        solutions.sort()
    return counts, solutions


def verify_solution_story(p: int, u: int, v: int):
    """Recheck a reported solution through the generic machinery: both covers
    have p-rank 0 and the full genus-5 fiber product has p-rank 0."""
    ctx = field(p)
    f_eu, f_dv = quotient_polys(ctx.elem(u), ctx.elem(v))
    if p_rank(HyperellipticModel(ctx, f_eu)) != 0:
        raise RuntimeError(f"E_u component of ({u}, {v}) is not of p-rank 0")
    if p_rank(HyperellipticModel(ctx, f_dv)) != 0:
        raise RuntimeError(f"D_v component of ({u}, {v}) is not of p-rank 0")
    genus, rank = prank_fiber_product(f_eu, f_dv)
    if (genus, rank) != (5, 0):
        raise RuntimeError(
            f"solution ({u}, {v}) fails the genus-5 story: genus {genus}, p-rank {rank}"
        )


def ss5_sweep(cfg: SweepConfig) -> SearchResult:
    """Run the grid sweep for one prime.  Deterministic for any thread count:
    chunks partition the u-rows in ascending order and are merged in order."""
    start = time.monotonic()
    p = cfg.p
    grid = [x for x in range(p) if x not in (1, p - 1)]
    rows = cfg.chunk or max(1, DEFAULT_CHUNK_PAIRS // max(1, len(grid)))
    chunks = [grid[i : i + rows] for i in range(0, len(grid), rows)]

    if cfg.threads == 1 or len(chunks) == 1:
        ordered = map(lambda c: _process_chunk(p, c, grid), chunks)
        iterator = enumerate(ordered)
    else:
        pool = ThreadPoolExecutor(max_workers=cfg.threads)
        futures = [pool.submit(_process_chunk, p, c, grid) for c in chunks]
        iterator = enumerate(f.result() for f in futures)

    counts = {
        "tested": 0,
        "excluded_uv": p * p - len(grid) ** 2,
        "excluded_gcd": 0,
        "excluded_singular": 0,
    }
    solutions = []
    for i, (chunk_counts, chunk_solutions) in iterator:
        for key in ("tested", "excluded_gcd", "excluded_singular"):
            counts[key] += chunk_counts[key]
        if chunk_solutions:
            if cfg.mode == "first":
                solutions = [chunk_solutions[0]]
                break
            solutions.extend(chunk_solutions)
    if cfg.threads > 1 and len(chunks) > 1:
        pool.shutdown(wait=False, cancel_futures=True)
    solutions.sort()
    for u, v in solutions:
        verify_solution_story(p, u, v)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return SearchResult(
        p=p, mode=cfg.mode, solutions=solutions, counts=counts, elapsed_ms=elapsed_ms
    )


# -- results cache ----------------------------------------------------------------


def result_path(results_dir, p: int) -> Path:
    return Path(results_dir) / "ss5" / f"p={p}.json"


def write_result(results_dir, result: SearchResult) -> Path:
    path = result_path(results_dir, result.p)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".json.tmp")
    tmp.write_text(json.dumps(result.to_json(), sort_keys=True, indent=2) + "\n")
    os.replace(tmp, path)
    return path


def load_result(results_dir, p: int):
    path = result_path(results_dir, p)
    if not path.exists():
        return None
    return SearchResult.from_json(json.loads(path.read_text()))


def sweep_with_cache(cfg: SweepConfig, results_dir, force: bool = False):
    """Returns (result, from_cache); persists fresh results atomically."""
    if not force:
        cached = load_result(results_dir, cfg.p)
        if cached is not None:
            return cached, True
    result = ss5_sweep(cfg)
    write_result(results_dir, result)
    return result, False


# -- flagged extension-field search (no reproduction claim) ------------------------


def ss5_sweep_ext(p: int, mode: str = "first") -> SearchResult:
    """Exploratory sweep with (u, v) over GF(p^2); guarded to small grids.
    No expected outcome is attached to these findings."""
    if not is_prime(p) or p % 12 != 11:
        raise ValueError(f"p = {p} is not a prime with p = 11 (mod 12)")
    ctx = field(p, 2)
    elems = [e for e in ctx.elements() if not (e == ctx.one or e == -ctx.one)]
    grid_size = len(elems) ** 2
    if grid_size > EXT_GRID_GUARD:
        raise ValueError(
            f"extension grid has {grid_size} pairs, beyond the guard {EXT_GRID_GUARD}"
        )
    start = time.monotonic()
    counts = {
        "tested": 0,
        "excluded_uv": ctx.order**2 - grid_size,
        "excluded_gcd": 0,
        "excluded_singular": 0,
    }
    solutions = []
    done = False
    for u in elems:
        for v in elems:
            r = ss5_check_pair(p, u, v, strategy="auto")
            if r.status == "excluded":
                counts["excluded_" + r.reason] += 1
                continue
            counts["tested"] += 1
            if r.status == "solution":
                solutions.append((str(u), str(v)))
                if mode == "first":
                    done = True
                    break
        if done:
            break
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return SearchResult(
        p=p, mode=f"ext-{mode}", solutions=solutions, counts=counts, elapsed_ms=elapsed_ms
    )


# -- exhaustive genus-2 superspecial enumeration ------------------------------------


def superspecial_g2_enumeration(p: int, q: int) -> list:
    """All monic squarefree f of degree 5 or 6 over GF(q) whose Cartier-Manin
    matrix vanishes, in lexicographic coefficient order."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p = {p} must be an odd prime")
    if p > 5:
        raise ValueError(f"exhaustive enumeration is guarded to p <= 5, got {p}")
    if q == p:
        ctx = field(p)
    elif q == p * p:
        ctx = field(p, 2)
    else:
        raise ValueError(f"q = {q} must be p or p^2")
    if q**6 + q**5 > ENUM_GUARD:
        raise ValueError(f"candidate count {q**6 + q**5} exceeds the guard {ENUM_GUARD}")
    m = (p - 1) // 2
    ext = ctx.ext_degree
    one_raw = 1 if ext == 1 else (1, 0)
    raw_elems = [e.coords[0] if ext == 1 else e.coords for e in ctx.elements()]
    needed = [p * j - i for j in (1, 2) for i in (1, 2)]
    out = []
    for d in (5, 6):
        for tail in product(raw_elems, repeat=d):
            coeffs = list(tail) + [one_raw]
            if m == 1:
                # f^1 = f: the matrix entries are plain coefficient reads
                if any(not _is_rzero(ext, coeffs[k]) for k in needed):
                    continue
                f = DensePoly(ctx, coeffs)
            else:
                f = DensePoly(ctx, coeffs)
                top = m * d
                vals = power_coeffs(f, m, {k for k in needed if k <= top}, "naive")
                if any(not v.is_zero for v in vals.values()):
                    continue
            if is_squarefree(f):
                out.append(HyperellipticModel(ctx, f))
    return out
