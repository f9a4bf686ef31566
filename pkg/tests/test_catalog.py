import pytest

from cfl.catalog import (catalog_entries, enumerate_lattices, enumerate_posets,
                         named_lattices, product_lattice)
from cfl.lattices import (CapExceeded, Lattice, LatticeError, chain,
                          is_distributive, lattices_isomorphic)


def test_named_catalog_shapes():
    named = named_lattices()
    assert named["chain0"].n == 1 and named["chain6"].n == 7
    assert named["b2"].n == 4 and named["b3"].n == 8
    assert named["m3"].n == 5 and named["n5"].n == 5
    assert named["grid2x3"].n == 6
    assert is_distributive(named["grid2x3"])
    assert not is_distributive(named["m3"]) and not is_distributive(named["n5"])


def test_product_lattice():
    grid = product_lattice(chain(1), chain(2))
    assert grid.n == 6
    assert lattices_isomorphic(grid, product_lattice(chain(2), chain(1)))
    assert lattices_isomorphic(product_lattice(chain(0), chain(2)), chain(2))


def test_poset_counts():
    assert [len(enumerate_posets(k)) for k in range(5)] == [1, 1, 3, 19, 219]


def test_enumerate_smallest():
    found = list(enumerate_lattices(1))
    assert len(found) == 1 and found[0].n == 1
    two = [lat for lat in enumerate_lattices(2) if lat.n == 2]
    # the 2-antichain is not a lattice; both labelings of the chain are
    assert len(two) == 2
    assert all(lattices_isomorphic(lat, chain(1)) for lat in two)


def test_enumerate_counts_small():
    assert sum(1 for lat in enumerate_lattices(3) if lat.n == 3) == 6
    assert sum(1 for lat in enumerate_lattices(4) if lat.n == 4) == 36


def test_enumerate_no_duplicates():
    seen = set()
    for lat in enumerate_lattices(4):
        key = (lat.n, lat.poset.leq.rows)
        assert key not in seen
        seen.add(key)


def test_enumeration_recount_at_five():
    # independent oracle: scan every labeled poset and keep the lattices
    posets = enumerate_posets(5)
    assert len(posets) == 4231
    brute = 0
    for p in posets:
        try:
            Lattice.from_poset(p)
            brute += 1
        except LatticeError:
            pass
    fast = sum(1 for lat in enumerate_lattices(5) if lat.n == 5)
    assert fast == brute


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_lattices(7))


def test_catalog_entries_filters():
    small = catalog_entries(max_size=5)
    names = [name for name, _ in small]
    assert "m3" in names and "b3" not in names and "grid2x3" not in names
    assert all(lat.n <= 5 for _, lat in small)
    extended = catalog_entries(max_size=3, exhaustive_max=3)
    xnames = [name for name, _ in extended if name.startswith("x")]
    assert len(xnames) == 1 + 2 + 6
    assert "x3.5" in xnames
