"""Brute-force enumeration of lattice points by word length.

A lattice is described by a finite symmetric generator set of integer
vectors.  Breadth-first search counts the points whose shortest word in
the generators has length exactly k; those counts recover the
coordinator polynomial of the lattice, which cross-checks the closed
forms and handles the exceptional lattices that have none here.

Two interchangeable backends: a compiled kernel packing small vectors
into 64-bit keys, and a pure-Python reference.  Both produce identical
counts; `backend="auto"` picks the kernel whenever its packing range
can hold the requested depth.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path
from typing import Optional

from ..coordinator import (
    CLOSED_FORM_TAGS,
    LatticeType,
    coordinator,
)
from ..exactpoly import Polynomial, binom, poly, series_expand
from . import _pybfs

try:
    from . import _bfs as _native
except ImportError:
    _native = None

__all__ = [
    "LatticeSpec",
    "LengthCensus",
    "OracleReport",
    "MemoryBudgetExceeded",
    "ExpensiveLatticeError",
    "ReconstructionError",
    "lattice_spec",
    "enumerate_lengths",
    "recover_coordinator",
    "oracle_verify",
    "native_available",
    "format_generator_table",
    "parse_generator_table",
    "save_generator_table",
    "load_generator_table",
    "census_to_csv",
    "save_census",
]

# a packed 8-bit field biased by 128 stays clear of its neighbours as
# long as every coordinate reached by the walk is within this bound
_PACK_LIMIT = 120
_PACK_DIM = 8


class MemoryBudgetExceeded(RuntimeError):
    """Enumeration stopped early; partial counts are attached."""

    def __init__(self, last_completed_level: int, partial_counts: tuple[int, ...]):
        self.last_completed_level = last_completed_level
        self.partial_counts = partial_counts
        super().__init__(
            f"memory budget exceeded after level {last_completed_level}; "
            f"partial counts {list(partial_counts)}"
        )


class ExpensiveLatticeError(ValueError):
    """E-series enumeration requested without the explicit opt-in."""


class ReconstructionError(ValueError):
    """Census counts are inconsistent with any coordinator polynomial."""


def _span_rank(vectors: tuple[tuple[int, ...], ...]) -> int:
    """Rank of the span over the rationals, by exact elimination."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    cols = len(rows[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                for j in range(c, cols):
                    rows[i][j] -= f * rows[r][j]
        r += 1
    return r


@dataclass(frozen=True)
class LatticeSpec:
    """A lattice given by generators: symmetric, nonzero, distinct."""

    ambient_dim: int
    rank: int
    generators: tuple[tuple[int, ...], ...]
    scale: int = 1
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        # canonical sorted order, so specs built from the same vector set
        # compare equal regardless of construction order
        gens = tuple(sorted(tuple(int(c) for c in g) for g in self.generators))
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("generator set is empty")
        if any(len(g) != self.ambient_dim for g in gens):
            raise ValueError("generator length differs from ambient_dim")
        if any(all(c == 0 for c in g) for g in gens):
            raise ValueError("zero vector among generators")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generators")
        gset = set(gens)
        for g in gens:
            if tuple(-c for c in g) not in gset:
                raise ValueError(f"generator set not symmetric: missing -{g}")
        if self.scale < 1:
            raise ValueError("scale must be a positive integer")
        got = _span_rank(gens)
        if got != self.rank:
            raise ValueError(f"declared rank {self.rank}, span has rank {got}")

    @property
    def max_component(self) -> int:
        return max(abs(c) for g in self.generators for c in g)


@dataclass(frozen=True)
class LengthCensus:
    """S(k) = number of points at word length exactly k, k = 0..K."""

    spec: LatticeSpec
    K: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != self.K + 1:
            raise ValueError("counts length must be K+1")
        if self.counts[0] != 1:
            raise ValueError("S(0) must be 1 (the origin)")
        # negation maps length-k words to length-k words and fixes only
        # the origin, so every level beyond the origin has even size
        for k in range(1, self.K + 1):
            if self.counts[k] < 0 or self.counts[k] % 2:
                raise ValueError(f"S({k})={self.counts[k]} not even and >= 0")


@dataclass(frozen=True)
class OracleReport:
    """Outcome of checking a census against the coordinator polynomial."""

    ltype: LatticeType
    K: int
    matched: bool
    census: LengthCensus
    first_mismatch: Optional[tuple[int, int, int]] = None
    closed_form: Optional[Polynomial] = None
    recovered: Optional[Polynomial] = None
    detail: str = ""


def _gens_a(n: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    dim = n + 1
    gens = []
    for i in range(dim):
        for j in range(dim):
            if i != j:
                v = [0] * dim
                v[i] = 1
                v[j] = -1
                gens.append(tuple(v))
    return tuple(gens), dim


def _pm_pairs(n: int) -> list[tuple[int, ...]]:
    out = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [0] * n
            v[i] = si
            v[j] = sj
            out.append(tuple(v))
    return out


def _axis(n: int, i: int, c: int) -> tuple[int, ...]:
    v = [0] * n
    v[i] = c
    return tuple(v)


def _gens_b(n: int) -> tuple[tuple[int, ...], ...]:
    gens = _pm_pairs(n) if n >= 2 else []
    gens += [_axis(n, i, s) for i in range(n) for s in (1, -1)]
    return tuple(gens)


def _gens_c(n: int) -> tuple[tuple[int, ...], ...]:
    gens = _pm_pairs(n) if n >= 2 else []
    gens += [_axis(n, i, s) for i in range(n) for s in (2, -2)]
    return tuple(gens)


def _gens_g2() -> tuple[tuple[int, ...], ...]:
    gens = []
    for i, j in combinations(range(3), 2):
        v = [0] * 3
        v[i], v[j] = 1, -1
        gens.append(tuple(v))
        gens.append(tuple(-c for c in v))
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        v = [0] * 3
        v[i], v[j], v[k] = 2, -1, -1
        gens.append(tuple(v))
        gens.append(tuple(-c for c in v))
    return tuple(gens)


def _gens_f4() -> tuple[tuple[int, ...], ...]:
    # doubled so the half-integer vectors are integral; word lengths do
    # not see the global scale
    gens = [_axis(4, i, s) for i in range(4) for s in (2, -2)]
    gens += [tuple(2 * c for c in v) for v in _pm_pairs(4)]
    gens += [tuple(eps) for eps in product((1, -1), repeat=4)]
    return tuple(gens)


def _gens_e8() -> tuple[tuple[int, ...], ...]:
    gens = [tuple(2 * c for c in v) for v in _pm_pairs(8)]
    for eps in product((1, -1), repeat=8):
        if sum(1 for e in eps if e < 0) % 2 == 0:
            gens.append(eps)
    return tuple(gens)


def _gens_e7() -> tuple[tuple[int, ...], ...]:
    gens = []
    for v in _pm_pairs(6):
        gens.append(tuple(2 * c for c in v) + (0, 0))
    gens.append((0, 0, 0, 0, 0, 0, 2, -2))
    gens.append((0, 0, 0, 0, 0, 0, -2, 2))
    for eps in product((1, -1), repeat=6):
        if sum(1 for e in eps if e < 0) % 2 == 1:
            gens.append(eps + (1, -1))
            gens.append(tuple(-e for e in eps) + (-1, 1))
    return tuple(gens)


def _gens_e6() -> tuple[tuple[int, ...], ...]:
    gens = []
    for v in _pm_pairs(5):
        gens.append(tuple(2 * c for c in v) + (0, 0, 0))
    for eps in product((1, -1), repeat=5):
        if sum(1 for e in eps if e < 0) % 2 == 0:
            gens.append(eps + (-1, -1, 1))
            gens.append(tuple(-e for e in eps) + (1, 1, -1))
    return tuple(gens)


def lattice_spec(ltype: LatticeType, allow_expensive: bool = False) -> LatticeSpec:
    """Generator table for the given lattice type.

    The E-series tables have 72 to 240 generators in eight dimensions
    and enumeration over them grows quickly, so they sit behind
    allow_expensive.
    """
    tag, n = ltype.tag, ltype.rank
    if tag in ("E6", "E7", "E8") and not allow_expensive:
        raise ExpensiveLatticeError(
            f"{tag} enumeration is expensive; pass allow_expensive=True "
            "(--allow-expensive on the command line)"
        )
    if tag == "A":
        gens, dim = _gens_a(n)
        return LatticeSpec(dim, n, gens, 1, str(ltype))
    if tag == "B":
        return LatticeSpec(n, n, _gens_b(n), 1, str(ltype))
    if tag == "C":
        return LatticeSpec(n, n, _gens_c(n), 1, str(ltype))
    if tag == "D":
        return LatticeSpec(n, n, tuple(_pm_pairs(n)), 1, str(ltype))
    if tag == "G2":
        return LatticeSpec(3, 2, _gens_g2(), 1, "G2")
    if tag == "F4":
        return LatticeSpec(4, 4, _gens_f4(), 2, "F4")
    if tag == "E6":
        return LatticeSpec(8, 6, _gens_e6(), 2, "E6")
    if tag == "E7":
        return LatticeSpec(8, 7, _gens_e7(), 2, "E7")
    if tag == "E8":
        return LatticeSpec(8, 8, _gens_e8(), 2, "E8")
    raise ValueError(f"no generator table for type {tag}")


def native_available() -> bool:
    return _native is not None


def _native_ok(spec: LatticeSpec, K: int) -> bool:
    return (
        _native is not None
        and spec.ambient_dim <= _PACK_DIM
        and K * spec.max_component <= _PACK_LIMIT
    )


def enumerate_lengths(
    spec: LatticeSpec,
    K: int,
    backend: str = "auto",
    memory_budget_mib: Optional[int] = None,
) -> LengthCensus:
    """Census of word lengths 0..K for the given generator set.

    backend: "auto" picks the compiled kernel when it applies, "native"
    insists on it, "python" forces the reference implementation.
    Raises MemoryBudgetExceeded when the budget runs out before K.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    if backend not in ("auto", "native", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "native":
        if _native is None:
            raise ValueError("compiled backend is not installed")
        if not _native_ok(spec, K):
            raise ValueError(
                "compiled backend cannot pack this run: needs "
                f"ambient_dim <= {_PACK_DIM} and K*max|component| <= {_PACK_LIMIT}"
            )
    budget = None if memory_budget_mib is None else memory_budget_mib * (1 << 20)
    use_native = backend == "native" or (backend == "auto" and _native_ok(spec, K))
    impl = _native if use_native else _pybfs
    counts, completed = impl.bfs_census(spec.generators, spec.ambient_dim, K, budget)
    if completed < K:
        raise MemoryBudgetExceeded(completed, tuple(counts))
    return LengthCensus(spec, K, tuple(counts))


def recover_coordinator(census: LengthCensus) -> Polynomial:
    """Coordinator polynomial from a census, by differencing the series.

    With d the lattice rank, h_j = sum_i (-1)^i C(d,i) S(j-i) for
    j = 0..d; the result is validated by expanding it back out to the
    census depth.
    """
    d = census.spec.rank
    if census.K < d:
        raise ValueError(f"census depth {census.K} is below the rank {d}")
    S = census.counts
    coeffs = []
    for j in range(d + 1):
        h = sum((-1) ** i * binom(d, i) * S[j - i] for i in range(j + 1))
        coeffs.append(h)
    for j, h in enumerate(coeffs):
        if h < 0:
            raise ReconstructionError(
                f"negative coefficient h_{j} = {h}; census does not come "
                f"from a rank-{d} coordinator polynomial"
            )
    p = poly(coeffs)
    if list(series_expand(p, d, census.K)) != list(S):
        raise ReconstructionError(
            "recovered polynomial fails to reproduce the census"
        )
    return p


def oracle_verify(
    ltype: LatticeType,
    K: int,
    backend: str = "auto",
    allow_expensive: bool = False,
    memory_budget_mib: Optional[int] = None,
) -> OracleReport:
    """Cross-check closed forms against the brute-force census.

    For A/B/C/D the closed-form series must match the census entry by
    entry; when depth allows, the census is also folded back into a
    polynomial that must equal the closed form.  For the exceptional
    types the recovered polynomial itself is the result.
    """
    spec = lattice_spec(ltype, allow_expensive)
    census = enumerate_lengths(spec, K, backend, memory_budget_mib)
    if ltype.tag in CLOSED_FORM_TAGS:
        h = coordinator(ltype).poly
        expected = series_expand(h, ltype.rank, K)
        for k in range(K + 1):
            if expected[k] != census.counts[k]:
                return OracleReport(
                    ltype,
                    K,
                    False,
                    census,
                    first_mismatch=(k, int(expected[k]), census.counts[k]),
                    closed_form=h,
                    detail=f"series mismatch at k={k}",
                )
        recovered = None
        if K >= ltype.rank:
            recovered = recover_coordinator(census)
            if recovered != h:
                return OracleReport(
                    ltype, K, False, census,
                    closed_form=h, recovered=recovered,
                    detail="recovered polynomial differs from closed form",
                )
        return OracleReport(ltype, K, True, census, closed_form=h, recovered=recovered)
    try:
        recovered = recover_coordinator(census)
    except (ReconstructionError, ValueError) as exc:
        return OracleReport(ltype, K, False, census, detail=str(exc))
    return OracleReport(ltype, K, True, census, recovered=recovered)


def format_generator_table(spec: LatticeSpec) -> str:
    lines = [f"dim={spec.ambient_dim} rank={spec.rank} scale={spec.scale}"]
    for g in sorted(spec.generators):
        lines.append(" ".join(str(c) for c in g))
    return "\n".join(lines) + "\n"


def parse_generator_table(text: str) -> LatticeSpec:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty generator table")
    header = dict(item.split("=", 1) for item in lines[0].split())
    try:
        dim = int(header["dim"])
        rank = int(header["rank"])
        scale = int(header["scale"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad generator table header: {lines[0]!r}") from exc
    gens = tuple(tuple(int(c) for c in ln.split()) for ln in lines[1:])
    return LatticeSpec(dim, rank, gens, scale)


def save_generator_table(spec: LatticeSpec, path) -> None:
    Path(path).write_text(format_generator_table(spec))


def load_generator_table(path) -> LatticeSpec:
    return parse_generator_table(Path(path).read_text())


def census_to_csv(census: LengthCensus) -> str:
    lines = ["k,S(k)"]
    for k, s in enumerate(census.counts):
        lines.append(f"{k},{s}")
    return "\n".join(lines) + "\n"


def save_census(census: LengthCensus, path) -> None:
    Path(path).write_text(census_to_csv(census))
