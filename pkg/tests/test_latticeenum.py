"""Generator tables, BFS census, and coordinator recovery."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coordlat.coordinator import LatticeType, coordinator
from coordlat.exactpoly import poly, series_expand
from coordlat.latticeenum import (
    ExpensiveLatticeError,
    LatticeSpec,
    LengthCensus,
    MemoryBudgetExceeded,
    ReconstructionError,
    census_to_csv,
    enumerate_lengths,
    format_generator_table,
    lattice_spec,
    load_generator_table,
    native_available,
    oracle_verify,
    parse_generator_table,
    recover_coordinator,
    save_generator_table,
)

BACKENDS = ["python"] + (["native"] if native_available() else [])


def lt(tag, n=None):
    return LatticeType(tag, n) if n is not None else LatticeType(tag)


def test_generator_counts_per_family():
    assert len(lattice_spec(lt("A", 2)).generators) == 6
    assert len(lattice_spec(lt("B", 3)).generators) == 18
    assert len(lattice_spec(lt("C", 3)).generators) == 18
    assert len(lattice_spec(lt("D", 4)).generators) == 24
    assert len(lattice_spec(lt("G2")).generators) == 12
    assert len(lattice_spec(lt("F4")).generators) == 48
    assert len(lattice_spec(lt("E6"), allow_expensive=True).generators) == 72
    assert len(lattice_spec(lt("E7"), allow_expensive=True).generators) == 126
    assert len(lattice_spec(lt("E8"), allow_expensive=True).generators) == 240


def test_declared_ranks_match_span():
    # LatticeSpec recomputes the span rank on construction, so building
    # each table is itself the check
    for tag in ("G2", "F4", "E6", "E7", "E8"):
        spec = lattice_spec(lt(tag), allow_expensive=True)
        assert spec.rank == LatticeType(tag).rank


def test_e_series_is_gated():
    for tag in ("E6", "E7", "E8"):
        with pytest.raises(ExpensiveLatticeError):
            lattice_spec(lt(tag))


def test_spec_validation():
    with pytest.raises(ValueError):
        LatticeSpec(2, 1, ((1, 0),))  # not symmetric
    with pytest.raises(ValueError):
        LatticeSpec(2, 1, ((0, 0),))  # zero vector
    with pytest.raises(ValueError):
        LatticeSpec(2, 2, ((1, 0), (-1, 0)))  # wrong rank
    with pytest.raises(ValueError):
        LatticeSpec(2, 1, ((1, 0, 0), (-1, 0, 0)))  # wrong length
    with pytest.raises(ValueError):
        LatticeSpec(1, 1, ())  # empty


def test_census_validation():
    spec = lattice_spec(lt("A", 1))
    with pytest.raises(ValueError):
        LengthCensus(spec, 2, (1, 2))  # wrong length
    with pytest.raises(ValueError):
        LengthCensus(spec, 1, (2, 2))  # S(0) != 1
    with pytest.raises(ValueError):
        LengthCensus(spec, 1, (1, 3))  # odd level


@pytest.mark.parametrize("backend", BACKENDS)
def test_known_small_censuses(backend):
    run = lambda t, K: enumerate_lengths(lattice_spec(t), K, backend).counts
    assert run(lt("A", 1), 4) == (1, 2, 2, 2, 2)
    assert run(lt("A", 2), 3) == (1, 6, 12, 18)
    # derived independently: series of the closed form, and both
    # backends agree on the raw walk
    assert run(lt("B", 2), 4) == (1, 8, 16, 24, 32)
    assert run(lt("C", 2), 4) == (1, 8, 16, 24, 32)
    assert run(lt("G2"), 4) == (1, 12, 30, 48, 66)


@pytest.mark.parametrize(
    "tag,n",
    [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 2), ("D", 3)],
)
def test_census_matches_closed_form_series(tag, n):
    t = lt(tag, n)
    census = enumerate_lengths(lattice_spec(t), 6)
    h = coordinator(t).poly
    assert census.counts == series_expand(h, n, 6)


@pytest.mark.skipif(not native_available(), reason="compiled kernel not built")
def test_backends_agree():
    cases = [
        (lt("A", 3), 6),
        (lt("B", 3), 6),
        (lt("C", 3), 5),
        (lt("D", 4), 5),
        (lt("G2"), 6),
        (lt("F4"), 4),
    ]
    for t, K in cases:
        spec = lattice_spec(t)
        a = enumerate_lengths(spec, K, backend="python").counts
        b = enumerate_lengths(spec, K, backend="native").counts
        assert a == b


@pytest.mark.skipif(not native_available(), reason="compiled kernel not built")
def test_backends_agree_on_custom_generators():
    # mixed signs and magnitudes exercise the packed-field carries
    spec = LatticeSpec(2, 2, ((1, 2), (-1, -2), (3, -1), (-3, 1)))
    a = enumerate_lengths(spec, 8, backend="python").counts
    b = enumerate_lengths(spec, 8, backend="native").counts
    assert a == b

    axes = tuple(
        tuple(s if i == j else 0 for j in range(8)) for i in range(8) for s in (1, -1)
    )
    spec8 = LatticeSpec(8, 8, axes)
    a = enumerate_lengths(spec8, 4, backend="python").counts
    b = enumerate_lengths(spec8, 4, backend="native").counts
    assert a == b


@pytest.mark.skipif(not native_available(), reason="compiled kernel not built")
def test_packing_range_is_enforced():
    spec = lattice_spec(lt("C", 2))  # components up to 2
    with pytest.raises(ValueError):
        enumerate_lengths(spec, 61, backend="native")
    # the packing boundary itself is fine: one axis pair, 40 steps of 3
    line = LatticeSpec(1, 1, ((3,), (-3,)))
    assert (
        enumerate_lengths(line, 40, backend="native").counts
        == enumerate_lengths(line, 40, backend="python").counts
    )


def test_auto_backend_falls_back_out_of_range():
    line = LatticeSpec(1, 1, ((3,), (-3,)))
    wide = enumerate_lengths(line, 50, backend="auto")  # 50*3 > 120
    assert wide.counts == enumerate_lengths(line, 50, backend="python").counts


@pytest.mark.parametrize("backend", BACKENDS)
def test_memory_budget_partial_result(backend):
    spec = lattice_spec(lt("D", 4))
    with pytest.raises(MemoryBudgetExceeded) as exc:
        enumerate_lengths(spec, 12, backend, memory_budget_mib=0)
    err = exc.value
    assert err.last_completed_level >= 1
    assert err.partial_counts[0] == 1
    assert len(err.partial_counts) == err.last_completed_level + 1


def test_recovery_round_trip():
    for tag, n in [("A", 2), ("B", 2), ("C", 3), ("D", 3)]:
        t = lt(tag, n)
        census = enumerate_lengths(lattice_spec(t), 6)
        assert recover_coordinator(census) == coordinator(t).poly


def test_recovery_needs_depth():
    census = enumerate_lengths(lattice_spec(lt("D", 4)), 3)
    with pytest.raises(ValueError):
        recover_coordinator(census)


def test_recovery_rejects_inconsistent_counts():
    spec = lattice_spec(lt("D", 2))
    with pytest.raises(ReconstructionError):
        recover_coordinator(LengthCensus(spec, 3, (1, 4, 8, 14)))
    with pytest.raises(ReconstructionError):
        recover_coordinator(LengthCensus(spec, 2, (1, 2, 2)))


def test_oracle_reports():
    rep = oracle_verify(lt("A", 2), 3)
    assert rep.matched
    assert rep.census.counts == (1, 6, 12, 18)
    assert rep.first_mismatch is None

    rep = oracle_verify(lt("G2"), 4)
    assert rep.matched
    assert [int(c) for c in rep.recovered.coeffs] == [1, 10, 7]


def test_isomorphic_lattices_have_equal_censuses():
    a3 = enumerate_lengths(lattice_spec(lt("A", 3)), 5).counts
    d3 = enumerate_lengths(lattice_spec(lt("D", 3)), 5).counts
    assert a3 == d3
    b2 = enumerate_lengths(lattice_spec(lt("B", 2)), 5).counts
    c2 = enumerate_lengths(lattice_spec(lt("C", 2)), 5).counts
    assert b2 == c2


def test_scale_does_not_change_the_census():
    spec = lattice_spec(lt("D", 3))
    doubled = LatticeSpec(
        spec.ambient_dim,
        spec.rank,
        tuple(tuple(2 * c for c in g) for g in spec.generators),
        scale=2,
    )
    assert (
        enumerate_lengths(spec, 5).counts == enumerate_lengths(doubled, 5).counts
    )


def test_generator_table_round_trip(tmp_path):
    spec = lattice_spec(lt("F4"))
    text = format_generator_table(spec)
    head = text.splitlines()[0]
    assert head == "dim=4 rank=4 scale=2"
    assert parse_generator_table(text) == spec

    path = tmp_path / "f4.gens"
    save_generator_table(spec, path)
    assert load_generator_table(path) == spec


def test_generator_table_rejects_garbage():
    with pytest.raises(ValueError):
        parse_generator_table("")
    with pytest.raises(ValueError):
        parse_generator_table("dim=x rank=1 scale=1\n1\n-1\n")


def test_census_csv(tmp_path):
    census = enumerate_lengths(lattice_spec(lt("A", 2)), 3)
    assert census_to_csv(census) == "k,S(k)\n0,1\n1,6\n2,12\n3,18\n"


@given(st.integers(1, 3), st.integers(0, 5))
@settings(max_examples=20, deadline=None)
def test_census_levels_are_even_after_origin(n, K):
    census = enumerate_lengths(lattice_spec(lt("B", n)), K)
    assert census.counts[0] == 1
    assert all(c % 2 == 0 for c in census.counts[1:])
