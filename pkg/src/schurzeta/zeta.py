"""Truncated Schur multiple zeta values over exponent-variable tableaux,
pushing-rule fillings, symmetrized sums, and exact identity verifiers for
the Pieri (row and column) and Littlewood-Richardson product formulas.

Exponent variables are strings ("s_1_2", "t_3"); an assignment is a plain
dict mapping variable names to integers (exact mode, evaluated in
arbitrary-precision rationals) or floats.  The identity checks run in
exact mode only: the truncated identities hold for every truncation level
and every integer assignment, so equality is tested with zero tolerance.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import islice, permutations, product
from math import factorial
from typing import NamedTuple

import numpy as np

from .insertion import column_insert_word, column_word, row_insert_word
from .partitions import (
    Partition,
    all_partitions,
    as_partition,
    cells,
    conjugate,
    corners,
    grow_cols,
    grow_rows,
    horizontal_strip_cols,
    vertical_strip_rows,
)
from .tableaux import (
    Tableau,
    as_tableau,
    cached_ssyt,
    lr_coefficient,
    reading_word,
    shape_of,
)

VarRows = tuple[tuple[str, ...], ...]

DEFAULT_SYM_CAP = 8


class SymSpec(NamedTuple):
    symmetrized: tuple[str, ...]
    fixed: frozenset[str]


@dataclass(frozen=True)
class IdentityReport:
    lhs: Fraction
    rhs: Fraction
    equal: bool
    note: str = ""


@dataclass(frozen=True)
class InsertionTermReport:
    lhs: Fraction
    rhs: Fraction
    equal: bool
    tableau: Tableau
    added: tuple[int, ...]


@dataclass(frozen=True)
class LimitReport:
    value: float
    levels: int
    last_increment: float
    converged: bool


# ---------------------------------------------------------------------------
# variable tableaux and assignments


def grid_vars(shape, prefix: str) -> VarRows:
    """Variable names over a shape, one per cell: prefix_i_j (1-indexed)."""
    shape = as_partition(shape)
    return tuple(
        tuple(f"{prefix}_{i + 1}_{j + 1}" for j in range(part))
        for i, part in enumerate(shape)
    )


def seq_vars(count: int, prefix: str) -> tuple[str, ...]:
    """Singly indexed variable names prefix_1 .. prefix_count."""
    return tuple(f"{prefix}_{k + 1}" for k in range(count))


def _flatten(var_rows) -> list[str]:
    return [v for row in var_rows for v in row]


def _is_exact_value(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def resolve_exponents(var_rows, assign) -> tuple[tuple, ...]:
    """Replace variable names by their assigned exponents."""
    out = []
    for row in var_rows:
        vals = []
        for var in row:
            if var not in assign:
                raise ValueError(f"assignment missing variable {var!r}")
            vals.append(assign[var])
        out.append(tuple(vals))
    return tuple(out)


def require_exact(assign, names) -> None:
    """Exact mode needs integer exponents >= 1 for every named variable."""
    for var in names:
        if var not in assign:
            raise ValueError(f"assignment missing variable {var!r}")
        v = assign[var]
        if not _is_exact_value(v) or v < 1:
            raise ValueError(
                f"exact mode needs integer exponents >= 1, got {var}={v!r}"
            )


# ---------------------------------------------------------------------------
# evaluation


def monomial(tableau, var_rows, assign):
    """1 / prod(entry ** exponent) over the cells; exact for int exponents."""
    t = as_tableau(tableau)
    exps = resolve_exponents(var_rows, assign)
    if shape_of(t) != tuple(len(r) for r in exps):
        raise ValueError("tableau and variable tableau shapes differ")
    if any(v < 1 for row in t for v in row):
        raise ValueError("tableau entries must be positive")
    if all(_is_exact_value(x) for row in exps for x in row):
        if any(x < 0 for row in exps for x in row):
            raise ValueError("integer exponents must be >= 0")
        den = 1
        for trow, erow in zip(t, exps):
            for base, ex in zip(trow, erow):
                den *= base**ex
        return Fraction(1, den)
    out = 1.0
    for trow, erow in zip(t, exps):
        for base, ex in zip(trow, erow):
            out *= float(base) ** -float(ex)
    return out


@cache
def _zeta_exact(shape: Partition, flat_exps: tuple, n_trunc: int) -> Fraction:
    counts: dict[int, int] = {}
    for t in cached_ssyt(shape, n_trunc):
        den = 1
        idx = 0
        for row in t:
            for base in row:
                den *= base ** flat_exps[idx]
                idx += 1
        counts[den] = counts.get(den, 0) + 1
    return sum((Fraction(c, d) for d, c in sorted(counts.items())), Fraction(0))


def _zeta_float(shape: Partition, flat_exps: tuple, n_trunc: int) -> float:
    total = 0.0
    for t in cached_ssyt(shape, n_trunc):
        term = 1.0
        idx = 0
        for row in t:
            for base in row:
                term *= float(base) ** -float(flat_exps[idx])
                idx += 1
        total += term
    return total


def eval_zeta_truncated(shape, var_rows, assign, n_trunc: int):
    """Finite Schur multiple zeta sum over tableaux with entries <= n_trunc.

    Exact rational when every exponent is an integer, float otherwise;
    zero when the shape has more rows than n_trunc.
    """
    shape = as_partition(shape)
    if n_trunc < 1:
        raise ValueError("truncation level must be >= 1")
    exps = resolve_exponents(var_rows, assign)
    if shape != tuple(len(r) for r in exps):
        raise ValueError("shape and variable tableau differ")
    flat = tuple(x for row in exps for x in row)
    if all(_is_exact_value(x) for x in flat):
        if any(x < 0 for x in flat):
            raise ValueError("integer exponents must be >= 0")
        return _zeta_exact(shape, flat, n_trunc)
    return _zeta_float(shape, tuple(float(x) for x in flat), n_trunc)


def in_convergence_domain(shape, var_rows, assign) -> bool:
    """Real parts >= 1 everywhere and > 1 at every corner cell."""
    shape = as_partition(shape)
    exps = resolve_exponents(var_rows, assign)
    if shape != tuple(len(r) for r in exps):
        raise ValueError("shape and variable tableau differ")
    corner_set = set(corners(shape))
    for i, row in enumerate(exps):
        for j, v in enumerate(row):
            if v < 1:
                return False
            if (i + 1, j + 1) in corner_set and not v > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# untruncated limit by level-incremental summation


def _strip_predecessors(shape: Partition) -> list[Partition]:
    bounds = [
        (shape[i + 1] if i + 1 < len(shape) else 0, shape[i])
        for i in range(len(shape))
    ]
    out = []
    for combo in product(*[range(lo, hi + 1) for lo, hi in bounds]):
        if combo != shape:
            out.append(as_partition(combo))
    return out


@cache
def _strip_chains(shape: Partition) -> tuple[tuple[Partition, ...], ...]:
    """Chains () = m0 < m1 < ... < mk = shape whose steps are nonempty
    horizontal strips; SSYT of the shape biject with (chain, level) data."""
    if not shape:
        return (((),),)
    chains = []
    for prev in _strip_predecessors(shape):
        for c in _strip_chains(prev):
            chains.append(c + (shape,))
    return tuple(chains)


def _chain_exponent_sums(chain, exps) -> list[float]:
    sums = []
    for prev, cur in zip(chain, chain[1:]):
        prev_pad = prev + (0,) * (len(cur) - len(prev))
        total = 0.0
        for i, (a, b) in enumerate(zip(prev_pad, cur)):
            for j in range(a, b):
                total += float(exps[i][j])
        sums.append(total)
    return sums


def eval_zeta_limit(
    shape,
    var_rows,
    assign,
    tol: float,
    max_level: int = 100_000_000,
    chunk: int = 1 << 21,
) -> LimitReport:
    """Evaluate the untruncated sum by increasing the entry bound until the
    per-level increment drops below tol.

    The stopping rule is heuristic (the reported increment is not a bound
    on the remaining tail); converged=False when max_level is reached
    first.  Requires the exponents to lie in the convergence domain.
    """
    shape = as_partition(shape)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not in_convergence_domain(shape, var_rows, assign):
        raise ValueError("exponents outside the convergence domain")
    if not shape:
        return LimitReport(1.0, 0, 0.0, True)
    exps = resolve_exponents(var_rows, assign)
    chains = [
        _chain_exponent_sums(chain, exps) for chain in _strip_chains(shape)
    ]
    carries = [[0.0] * len(ch) for ch in chains]
    warmup = sum(shape)
    value = 0.0
    level = 0
    incr = np.zeros(1)
    while level < max_level:
        lo, hi = level + 1, min(level + chunk, max_level)
        varr = np.arange(lo, hi + 1, dtype=np.float64)
        incr = np.zeros(len(varr))
        for steps, carry in zip(chains, carries):
            start = carry.copy()  # values at level lo-1; carry mutates below
            prev_arr = None
            t = None
            for j, exp_sum in enumerate(steps):
                pw = varr ** (-exp_sum)
                if j == 0:
                    t = pw
                else:
                    shifted = np.empty_like(prev_arr)
                    shifted[0] = start[j - 1]
                    shifted[1:] = prev_arr[:-1]
                    t = pw * shifted
                prev_arr = np.cumsum(t)
                prev_arr += start[j]
                carry[j] = float(prev_arr[-1])
            incr += t
        hit = np.nonzero((incr < tol) & (varr > warmup))[0]
        if len(hit):
            stop = int(hit[0])
            value += float(incr[: stop + 1].sum())
            return LimitReport(value, lo + stop, float(incr[stop]), True)
        value += float(incr.sum())
        level = hi
    return LimitReport(value, max_level, float(incr[-1]), False)


# ---------------------------------------------------------------------------
# symmetrized sums

def h_sym_spec(lam, m: int, unsafe: bool = False) -> SymSpec:
    """Symmetrized variable set for the row-strip (h-type) Pieri identity.

    Symmetrized: t_1..t_r (r = first part), the column-1 entries down to the
    height of column 2, and every entry of columns 2..r.  The remaining
    column-1 entries and t's beyond r stay fixed.  Needs m >= r unless
    unsafe is set (then the t-run truncates to m).
    """
    lam = as_partition(lam)
    r = lam[0] if lam else 0
    if m < 1:
        raise ValueError("strip size must be >= 1")
    if m < r and not unsafe:
        raise ValueError(f"need m >= first part {r}, got m={m}")
    conj = conjugate(lam)
    c1 = conj[0] if conj else 0
    c2 = conj[1] if len(conj) > 1 else 0
    sym = [f"t_{k}" for k in range(1, min(r, m) + 1)]
    sym += [f"s_{i}_1" for i in range(1, c2 + 1)]
    for j in range(2, r + 1):
        sym += [f"s_{i}_{j}" for i in range(1, conj[j - 1] + 1)]
    fixed = [f"s_{i}_1" for i in range(c2 + 1, c1 + 1)]
    fixed += [f"t_{k}" for k in range(r + 1, m + 1)]
    return SymSpec(tuple(sym), frozenset(fixed))


def e_sym_spec(lam, n: int, unsafe: bool = False) -> SymSpec:
    """Symmetrized variable set for the column-strip (e-type) Pieri
    identity; the conjugate mirror of h_sym_spec."""
    lam = as_partition(lam)
    s_len = len(lam)
    if n < 1:
        raise ValueError("strip size must be >= 1")
    if n < s_len and not unsafe:
        raise ValueError(f"need n >= length {s_len}, got n={n}")
    l2 = lam[1] if len(lam) > 1 else 0
    sym = [f"s_{k}" for k in range(1, min(s_len, n) + 1)]
    sym += [f"t_1_{j}" for j in range(1, l2 + 1)]
    for i in range(2, s_len + 1):
        sym += [f"t_{i}_{j}" for j in range(1, lam[i - 1] + 1)]
    fixed = [f"t_1_{j}" for j in range(l2 + 1, (lam[0] if lam else 0) + 1)]
    fixed += [f"s_{k}" for k in range(s_len + 1, n + 1)]
    return SymSpec(tuple(sym), frozenset(fixed))


@cache
def _perm_weight_exact(bases: tuple, values: tuple) -> Fraction:
    """Sum over all bijections of values onto bases of 1/prod(b**v)."""
    counts: dict[int, int] = {}
    for perm in permutations(values):
        den = 1
        for b, v in zip(bases, perm):
            den *= b**v
        counts[den] = counts.get(den, 0) + 1
    return sum((Fraction(c, d) for d, c in sorted(counts.items())), Fraction(0))


@cache
def _perm_weight_float(bases: tuple, values: tuple) -> float:
    total = 0.0
    for perm in permutations(values):
        term = 1.0
        for b, v in zip(bases, perm):
            term *= float(b) ** -float(v)
        total += term
    return total


def _term_positions(factors, sym_vars):
    """Locate each symmetrized variable (once) and the fixed cells of a
    product term; None when the fast path does not apply."""
    pos: dict[str, tuple[int, int, int]] = {}
    fixed_cells = []
    symset = set(sym_vars)
    for fi, (shape, rows) in enumerate(factors):
        shape = as_partition(shape)
        if shape != tuple(len(r) for r in rows):
            raise ValueError("factor shape and variable tableau differ")
        for i, row in enumerate(rows):
            for j, var in enumerate(row):
                if var in symset:
                    if var in pos:
                        return None
                    pos[var] = (fi, i, j)
                else:
                    fixed_cells.append((fi, i, j, var))
    if len(pos) != len(sym_vars):
        return None
    return [pos[v] for v in sym_vars], fixed_cells


def _term_sym_fast(coeff, factors, sym_vars, values, assign, n_trunc, exact):
    located = _term_positions(factors, sym_vars)
    if located is None:
        return None
    order, fixed_cells = located
    tab_lists = [cached_ssyt(as_partition(shape), n_trunc) for shape, _ in factors]
    if any(len(lst) == 0 for lst in tab_lists):
        return Fraction(0) if exact else 0.0
    values_key = tuple(sorted(values))
    if exact:
        buckets: dict[tuple, dict[int, int]] = {}
        for combo in product(*tab_lists):
            den = 1
            for fi, i, j, var in fixed_cells:
                den *= combo[fi][i][j] ** assign[var]
            key = tuple(sorted(combo[fi][i][j] for fi, i, j in order))
            buckets.setdefault(key, {})
            buckets[key][den] = buckets[key].get(den, 0) + 1
        total = Fraction(0)
        for key, dens in buckets.items():
            fixed_sum = sum(
                (Fraction(c, d) for d, c in sorted(dens.items())), Fraction(0)
            )
            total += _perm_weight_exact(key, values_key) * fixed_sum
        return coeff * total
    buckets_f: dict[tuple, float] = {}
    for combo in product(*tab_lists):
        part = 1.0
        for fi, i, j, var in fixed_cells:
            part *= float(combo[fi][i][j]) ** -float(assign[var])
        key = tuple(sorted(combo[fi][i][j] for fi, i, j in order))
        buckets_f[key] = buckets_f.get(key, 0.0) + part
    return coeff * sum(
        _perm_weight_float(key, values_key) * fs for key, fs in buckets_f.items()
    )


def _check_spec_and_values(terms, spec, assign):
    if set(spec.symmetrized) & spec.fixed:
        raise ValueError("symmetrized and fixed variable sets overlap")
    needed = set(spec.symmetrized)
    for _, factors in terms:
        for _, rows in factors:
            needed.update(_flatten(rows))
    missing = sorted(v for v in needed if v not in assign)
    if missing:
        raise ValueError(f"assignment missing variables {missing}")
    exact = all(_is_exact_value(assign[v]) for v in needed)
    if exact and any(assign[v] < 0 for v in needed):
        raise ValueError("integer exponents must be >= 0")
    return exact


def _sym_sum_serial(terms, spec, assign, n_trunc, exact):
    sym_vars = spec.symmetrized
    values = tuple(assign[v] for v in sym_vars)
    total = Fraction(0) if exact else 0.0
    for coeff, factors in terms:
        fast = _term_sym_fast(
            coeff, factors, sym_vars, values, assign, n_trunc, exact
        )
        if fast is not None:
            total += fast
            continue
        for perm in permutations(values):
            local = dict(assign)
            local.update(zip(sym_vars, perm))
            term = coeff
            for shape, rows in factors:
                term *= eval_zeta_truncated(shape, rows, local, n_trunc)
            total += term
    return total


def sym_sum_direct(terms, spec, assign, n_trunc: int):
    """Reference implementation: literal sum over all bijections of the
    symmetrized values.  Slower than sym_sum but definitionally direct."""
    exact = _check_spec_and_values(terms, spec, assign)
    values = tuple(assign[v] for v in spec.symmetrized)
    total = Fraction(0) if exact else 0.0
    for perm in permutations(values):
        local = dict(assign)
        local.update(zip(spec.symmetrized, perm))
        for coeff, factors in terms:
            term = coeff
            for shape, rows in factors:
                term *= eval_zeta_truncated(shape, rows, local, n_trunc)
            total += term
    return total


def _direct_block(args):
    terms, sym_vars, values, assign, n_trunc, exact, start, stop = args
    total = Fraction(0) if exact else 0.0
    for perm in islice(permutations(values), start, stop):
        local = dict(assign)
        local.update(zip(sym_vars, perm))
        for coeff, factors in terms:
            term = coeff
            for shape, rows in factors:
                term *= eval_zeta_truncated(shape, rows, local, n_trunc)
            total += term
    return total


def sym_sum(
    terms,
    spec: SymSpec,
    assign,
    n_trunc: int,
    cap: int = DEFAULT_SYM_CAP,
    allow_large: bool = False,
    jobs: int | None = None,
):
    """Sum over all permutations of the symmetrized exponent values of
    sum(coeff * prod of truncated zeta factors) over the given terms.

    Each term is (coeff, [(shape, var_rows), ...]).  Refuses more than
    ``cap`` symmetrized variables unless allow_large is set.  jobs > 1
    distributes permutation blocks over worker processes (results are
    exact and independent of the worker count).
    """
    k = len(spec.symmetrized)
    if k > cap and not allow_large:
        raise ValueError(
            f"{k} symmetrized variables means {k}! = {factorial(k)} "
            f"permutations; pass allow_large=True to proceed"
        )
    exact = _check_spec_and_values(terms, spec, assign)
    if jobs is None or jobs <= 1:
        return _sym_sum_serial(terms, spec, assign, n_trunc, exact)
    values = tuple(assign[v] for v in spec.symmetrized)
    nperm = factorial(k)
    terms = [
        (coeff, [(as_partition(s), tuple(tuple(r) for r in rows)) for s, rows in factors])
        for coeff, factors in terms
    ]
    block = max(1, -(-nperm // jobs))
    payloads = [
        (terms, spec.symmetrized, values, dict(assign), n_trunc, exact, lo, min(lo + block, nperm))
        for lo in range(0, nperm, block)
    ]
    total = Fraction(0) if exact else 0.0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_direct_block, payloads):
            total += part
    return total


# ---------------------------------------------------------------------------
# pushing-rule fillings


def horizontal_push_filling(lam, s_rows: VarRows, t_names, cols) -> VarRows:
    """Filling of the shape grown at the given columns: the k-th new
    variable sits in row 1 of the k-th grown column, and every existing
    entry in a grown column slides down one row."""
    lam = as_partition(lam)
    cols = tuple(sorted(int(c) for c in cols))
    if len(t_names) != len(cols):
        raise ValueError("one new variable per grown column required")
    if tuple(len(r) for r in s_rows) != lam:
        raise ValueError("variable tableau does not match the shape")
    new_shape = grow_cols(lam, cols)
    colset = set(cols)
    grid: list[list] = [[None] * part for part in new_shape]
    for idx, c in enumerate(cols):
        grid[0][c - 1] = t_names[idx]
    for i, row in enumerate(s_rows):
        for j, var in enumerate(row):
            ti = i + 1 if (j + 1) in colset else i
            grid[ti][j] = var
    if any(v is None for row in grid for v in row):
        raise ValueError(f"columns {cols} do not tile the grown shape")
    return tuple(tuple(row) for row in grid)


def vertical_push_filling(lam, s_names, t_rows: VarRows, rows) -> VarRows:
    """Filling of the shape grown at the given rows: the k-th new variable
    sits in column 1 of the k-th grown row, and every existing entry in a
    grown row slides right one column."""
    lam = as_partition(lam)
    rows = tuple(sorted(int(k) for k in rows))
    if len(s_names) != len(rows):
        raise ValueError("one new variable per grown row required")
    if tuple(len(r) for r in t_rows) != lam:
        raise ValueError("variable tableau does not match the shape")
    new_shape = grow_rows(lam, rows)
    rowset = set(rows)
    grid: list[list] = [[None] * part for part in new_shape]
    for idx, k in enumerate(rows):
        grid[k - 1][0] = s_names[idx]
    for i, row in enumerate(t_rows):
        shift = 1 if (i + 1) in rowset else 0
        for j, var in enumerate(row):
            grid[i][j + shift] = var
    if any(v is None for row in grid for v in row):
        raise ValueError(f"rows {rows} do not tile the grown shape")
    return tuple(tuple(row) for row in grid)


# ---------------------------------------------------------------------------
# identity verifiers


def verify_pieri_h(
    lam,
    m: int,
    assign,
    n_trunc: int,
    cap: int = DEFAULT_SYM_CAP,
    allow_large: bool = False,
    jobs: int | None = None,
) -> IdentityReport:
    """Exact truncated check of the row-strip Pieri identity: the
    symmetrized product of zeta(lam) and zeta((m)) against the symmetrized
    sum of zeta over all one-horizontal-strip extensions with pushed
    fillings.  Holds for every truncation level and integer assignment."""
    lam = as_partition(lam)
    if m < (lam[0] if lam else 0):
        raise ValueError(f"need m >= first part of {lam}, got {m}")
    s_rows = grid_vars(lam, "s")
    t_names = seq_vars(m, "t")
    require_exact(assign, _flatten(s_rows) + list(t_names))
    spec = h_sym_spec(lam, m)
    lhs = sym_sum(
        [(1, [(lam, s_rows), ((m,), (t_names,))])],
        spec, assign, n_trunc, cap, allow_large, jobs,
    )
    rhs_terms = [
        (1, [(grow_cols(lam, cols), horizontal_push_filling(lam, s_rows, t_names, cols))])
        for cols in horizontal_strip_cols(lam, m)
    ]
    rhs = sym_sum(rhs_terms, spec, assign, n_trunc, cap, allow_large, jobs)
    return IdentityReport(lhs, rhs, lhs == rhs)


def verify_pieri_e(
    lam,
    n: int,
    assign,
    n_trunc: int,
    cap: int = DEFAULT_SYM_CAP,
    allow_large: bool = False,
    jobs: int | None = None,
) -> IdentityReport:
    """Exact truncated check of the column-strip Pieri identity (conjugate
    of verify_pieri_h): zeta((1^n)) times zeta(lam) against the
    one-vertical-strip extensions."""
    lam = as_partition(lam)
    if n < len(lam):
        raise ValueError(f"need n >= length of {lam}, got {n}")
    t_rows = grid_vars(lam, "t")
    s_names = seq_vars(n, "s")
    require_exact(assign, _flatten(t_rows) + list(s_names))
    spec = e_sym_spec(lam, n)
    column = (1,) * n
    s_col_rows = tuple((name,) for name in s_names)
    lhs = sym_sum(
        [(1, [(column, s_col_rows), (lam, t_rows)])],
        spec, assign, n_trunc, cap, allow_large, jobs,
    )
    rhs_terms = [
        (1, [(grow_rows(lam, rows), vertical_push_filling(lam, s_names, t_rows, rows))])
        for rows in vertical_strip_rows(lam, n)
    ]
    rhs = sym_sum(rhs_terms, spec, assign, n_trunc, cap, allow_large, jobs)
    note = ""
    if n_trunc < n:
        note = (
            f"vacuous: truncation {n_trunc} < column height {n}, "
            "both sides are empty sums"
        )
    return IdentityReport(lhs, rhs, lhs == rhs, note)


def canonical_filling(lam, mu, nu, variant: int = 0) -> VarRows:
    """Deterministic filling of lam by the mu-variables then the
    nu-variables, row-major on both sides; variant 1 reverses the variable
    order (any fixed filling works for the product identity)."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        raise ValueError("sizes must satisfy |lam| = |mu| + |nu|")
    names = _flatten(grid_vars(mu, "s")) + _flatten(grid_vars(nu, "t"))
    if variant == 1:
        names = list(reversed(names))
    elif variant != 0:
        raise ValueError("variant must be 0 or 1")
    grid: list[list] = [[None] * part for part in lam]
    for (i, j), name in zip(cells(lam), names):
        grid[i - 1][j - 1] = name
    return tuple(tuple(row) for row in grid)


def verify_lr(
    mu,
    nu,
    assign,
    n_trunc: int,
    variant: int = 0,
    fillings=None,
    cap: int = DEFAULT_SYM_CAP,
    allow_large: bool = False,
    jobs: int | None = None,
) -> IdentityReport:
    """Exact truncated check of the Littlewood-Richardson product formula:
    the fully symmetrized product of two Schur multiple zeta values against
    the coefficient-weighted symmetrized sum over all shapes of the right
    size.  ``fillings`` may override the canonical filling per shape."""
    mu, nu = as_partition(mu), as_partition(nu)
    if not mu or not nu:
        raise ValueError("both shapes must be nonempty")
    s_rows = grid_vars(mu, "s")
    t_rows = grid_vars(nu, "t")
    all_vars = _flatten(s_rows) + _flatten(t_rows)
    require_exact(assign, all_vars)
    spec = SymSpec(tuple(all_vars), frozenset())
    lhs = sym_sum(
        [(1, [(mu, s_rows), (nu, t_rows)])],
        spec, assign, n_trunc, cap, allow_large, jobs,
    )
    overrides = {as_partition(k): tuple(tuple(r) for r in v) for k, v in (fillings or {}).items()}
    rhs_terms = []
    for lam in all_partitions(sum(mu) + sum(nu)):
        coeff = lr_coefficient(mu, nu, lam)
        if coeff == 0:
            continue
        filling = overrides.get(lam)
        if filling is None:
            filling = canonical_filling(lam, mu, nu, variant)
        if sorted(_flatten(filling)) != sorted(all_vars):
            raise ValueError(f"filling for {lam} must use every variable once")
        if tuple(len(r) for r in filling) != lam:
            raise ValueError(f"filling shape mismatch for {lam}")
        rhs_terms.append((coeff, [(lam, filling)]))
    rhs = sym_sum(rhs_terms, spec, assign, n_trunc, cap, allow_large, jobs)
    return IdentityReport(lhs, rhs, lhs == rhs)


def _sym_monomial_sum(pairs, spec, assign, cap, allow_large):
    k = len(spec.symmetrized)
    if k > cap and not allow_large:
        raise ValueError(
            f"{k} symmetrized variables; pass allow_large=True to proceed"
        )
    values = tuple(assign[v] for v in spec.symmetrized)
    total = Fraction(0)
    for perm in permutations(values):
        local = dict(assign)
        local.update(zip(spec.symmetrized, perm))
        term = Fraction(1)
        for tab, rows in pairs:
            term *= monomial(tab, rows, local)
        total += term
    return total


def verify_insertion_term(
    left,
    right,
    lam,
    size: int,
    mode: str,
    assign,
    cap: int = DEFAULT_SYM_CAP,
    allow_large: bool = False,
) -> InsertionTermReport:
    """Term-level check behind the Pieri identities: insert one tableau
    into the other, locate the grown strip, and compare the symmetrized
    monomial sums of the pair against the pushed filling of the result.

    mode "h": left has shape lam, right is a single row of length size,
    row insertion of right's reading word.  mode "e": left is a column of
    height size, right has shape lam, column insertion of left's entries
    top to bottom.  A result shape outside the strip family is a hard
    failure (it would falsify the underlying bijection).
    """
    lam = as_partition(lam)
    left, right = as_tableau(left), as_tableau(right)
    if mode == "h":
        if shape_of(left) != lam or shape_of(right) != (size,):
            raise ValueError("mode h needs left of shape lam, right one row")
        result, _ = row_insert_word(left, reading_word(right))
        new_shape = shape_of(result)
        co, cn = conjugate(lam), conjugate(new_shape)
        co = co + (0,) * (len(cn) - len(co))
        added = tuple(j + 1 for j, (a, b) in enumerate(zip(co, cn)) if b > a)
        if len(added) != size or grow_cols(lam, added) != new_shape:
            raise RuntimeError(
                f"insertion produced {new_shape}, not a horizontal-strip "
                f"extension of {lam}"
            )
        s_rows = grid_vars(lam, "s")
        t_names = seq_vars(size, "t")
        require_exact(assign, _flatten(s_rows) + list(t_names))
        spec = h_sym_spec(lam, size)
        lhs = _sym_monomial_sum(
            [(left, s_rows), (right, (t_names,))], spec, assign, cap, allow_large
        )
        filling = horizontal_push_filling(lam, s_rows, t_names, added)
        rhs = _sym_monomial_sum([(result, filling)], spec, assign, cap, allow_large)
        return InsertionTermReport(lhs, rhs, lhs == rhs, result, added)
    if mode == "e":
        if shape_of(left) != (1,) * size or shape_of(right) != lam:
            raise ValueError("mode e needs left a column of height size")
        result, _ = column_insert_word(column_word(left), right)
        new_shape = shape_of(result)
        lam_pad = lam + (0,) * (len(new_shape) - len(lam))
        added = tuple(
            i + 1 for i, (a, b) in enumerate(zip(lam_pad, new_shape)) if b > a
        )
        if len(added) != size or grow_rows(lam, added) != new_shape:
            raise RuntimeError(
                f"insertion produced {new_shape}, not a vertical-strip "
                f"extension of {lam}"
            )
        t_rows = grid_vars(lam, "t")
        s_names = seq_vars(size, "s")
        require_exact(assign, _flatten(t_rows) + list(s_names))
        spec = e_sym_spec(lam, size)
        s_col_rows = tuple((name,) for name in s_names)
        lhs = _sym_monomial_sum(
            [(left, s_col_rows), (right, t_rows)], spec, assign, cap, allow_large
        )
        filling = vertical_push_filling(lam, s_names, t_rows, added)
        rhs = _sym_monomial_sum([(result, filling)], spec, assign, cap, allow_large)
        return InsertionTermReport(lhs, rhs, lhs == rhs, result, added)
    raise ValueError(f"mode must be 'h' or 'e', got {mode!r}")
