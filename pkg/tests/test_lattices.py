import json

import pytest

from cfl.catalog import enumerate_posets, named_lattices
from cfl.lattices import (BottomNotPreserved, CapExceeded, JoinMap, Lattice,
                          LatticeError, NoJoin, NoMeet, NotAntisymmetric,
                          NotJoinPreserving,
                          Poset, canonical_surjection, chain, derived_lattices,
                          ideal_lattice, irreducibles, is_distributive,
                          join_maps, lattice_from_json, lattice_from_leq,
                          lattice_to_json, lattices_isomorphic, mobius,
                          posets_isomorphic, principal_embed, r_of)


@pytest.fixture(scope="module")
def named():
    return named_lattices()


def test_two_chain():
    lat = lattice_from_leq(2, [(0, 1)])
    assert lat.bottom == 0 and lat.top == 1
    assert lat.join[0][1] == 1 and lat.meet[0][1] == 0


def test_square_lattice():
    lat = lattice_from_leq(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert lat.join[1][2] == 3 and lat.meet[1][2] == 0
    assert is_distributive(lat)


def test_bowtie_has_no_join():
    with pytest.raises(NoJoin) as err:
        lattice_from_leq(4, [(0, 1), (0, 2)])
    assert err.value.pair == (1, 2)


def test_no_meet_reported():
    # two minimal elements below a common top
    with pytest.raises(NoMeet) as err:
        lattice_from_leq(3, [(0, 2), (1, 2)])
    assert err.value.pair == (0, 1)


def test_antisymmetry_failure_named():
    with pytest.raises(NotAntisymmetric) as err:
        lattice_from_leq(3, [(0, 1), (1, 0), (0, 2)])
    assert err.value.pair == (0, 1)


def test_join_meet_laws(named):
    for lat in named.values():
        for a in range(lat.n):
            assert lat.join[a][a] == a and lat.meet[a][a] == a
            assert lat.join[a][lat.bottom] == a
            assert lat.meet[a][lat.top] == a
            for b in range(lat.n):
                assert lat.join[a][b] == lat.join[b][a]
                assert lat.meet[a][lat.join[a][b]] == a  # absorption
                assert lat.join[a][lat.meet[a][b]] == a
                for c in range(lat.n):
                    assert lat.join[lat.join[a][b]][c] == lat.join[a][lat.join[b][c]]


def test_irreducibles_of_chain():
    for n in range(5):
        elems, sub = irreducibles(chain(n))
        assert elems == list(range(1, n + 1))
        assert all(sub.le(a, b) for a in range(n) for b in range(a, n))


def test_irreducibles_of_square_and_diamond(named):
    elems, sub = irreducibles(named["b2"])
    assert elems == [1, 2]
    assert not sub.le(0, 1) and not sub.le(1, 0)
    elems, sub = irreducibles(named["m3"])
    assert elems == [1, 2, 3]
    assert all(not sub.le(a, b) for a in range(3) for b in range(3) if a != b)


def test_r_of_examples():
    two = chain(2)
    assert r_of(two, 2) == 1 and r_of(two, 1) == 0 and r_of(two, 0) == 0
    b2 = named_lattices()["b2"]
    assert r_of(b2, 1) == 0 and r_of(b2, 2) == 0
    assert r_of(b2, 3) == 3  # the top is the join of the two atoms


def test_ideal_lattice_of_antichains():
    lat, enc = ideal_lattice(Poset.antichain(2))
    assert lat.n == 4 and list(enc) == [0, 1, 2, 3]
    assert lattices_isomorphic(lat, named_lattices()["b2"])
    lat3, enc3 = ideal_lattice(Poset.antichain(3))
    assert lat3.n == 8


def test_ideal_lattice_of_chain():
    lat, enc = ideal_lattice(chain(1).poset)
    assert lat.n == 3
    assert lattices_isomorphic(lat, chain(2))
    assert list(enc) == [0b00, 0b01, 0b11]


def test_ideal_lattice_direction():
    p = Poset.from_pairs(2, [(0, 1)])
    up_lat, up_enc = ideal_lattice(p, "upper")
    dn_lat, dn_enc = ideal_lattice(p.opposite(), "lower")
    assert up_enc == dn_enc and up_lat == dn_lat
    with pytest.raises(ValueError):
        ideal_lattice(p, "sideways")


def test_principal_embed_examples():
    p = Poset.from_pairs(2, [(0, 1)])
    lat, enc = ideal_lattice(p)
    embed = principal_embed(p)
    assert [enc[i] for i in embed] == [0b01, 0b11]
    anti = Poset.antichain(3)
    lat, enc = ideal_lattice(anti)
    assert [enc[i] for i in principal_embed(anti)] == [1, 2, 4]


def test_principal_embed_hits_the_irreducibles():
    for p in enumerate_posets(4):
        lat, _ = ideal_lattice(p)
        elems, sub = irreducibles(lat)
        assert sorted(principal_embed(p)) == elems
        assert posets_isomorphic(sub, p)


def test_distributivity(named):
    assert is_distributive(named["b3"])
    assert not is_distributive(named["m3"])
    assert not is_distributive(named["n5"])


def test_mobius_chain_and_square(named):
    two = mobius(chain(2))
    assert two[0, 1] == -1 and two[0, 2] == 0 and two[0, 0] == 1
    assert mobius(named["b2"])[0, 3] == 1
    assert (0, 3) in mobius(named["b2"]) and (3, 0) not in mobius(named["b2"])


def test_mobius_recursion_sums_to_zero(named):
    for lat in named.values():
        mob = mobius(lat)
        for a in range(lat.n):
            for b in range(lat.n):
                if a != b and lat.le(a, b):
                    total = sum(mob[a, c] for c in range(lat.n)
                                if lat.le(a, c) and lat.le(c, b))
                    assert total == 0


def test_canonical_surjection_on_distributive(named):
    srj = canonical_surjection(named["b2"])
    assert srj.is_surjective() and srj.src.n == named["b2"].n
    assert lattices_isomorphic(srj.src, named["b2"])


def test_canonical_surjection_on_diamond(named):
    srj = canonical_surjection(named["m3"])
    assert srj.src.n == 8 and srj.dst.n == 5
    assert srj.is_surjective()
    hits_top = [i for i in range(8) if srj.images[i] == named["m3"].top]
    assert len(hits_top) == 4  # the three two-subsets and the full set


def test_canonical_surjection_trivial():
    srj = canonical_surjection(chain(0))
    assert srj.src.n == 1 and srj.images == (0,)


def test_derived_lattices(named):
    der = derived_lattices(chain(1))
    assert der.boolean.n == 4
    assert der.upsilon.images == (0, 0, 1, 1)  # {}, {0}, {1}, {0,1}
    assert lattices_isomorphic(chain(3).opposite(), chain(3))
    assert lattices_isomorphic(named["m3"].opposite(), named["m3"])
    with pytest.raises(CapExceeded):
        derived_lattices(named_lattices()["chain6"])


def test_join_map_validation(named):
    b2 = named["b2"]
    JoinMap.identity(b2)
    JoinMap.constant_bottom(b2, b2)
    JoinMap(b2, b2, [0, 2, 1, 3])  # swap the atoms
    with pytest.raises(NotJoinPreserving):
        JoinMap(b2, b2, [0, 1, 2, 1])  # top to an atom, atoms fixed
    with pytest.raises(BottomNotPreserved):
        JoinMap(b2, b2, [1, 1, 3, 3])


def test_join_map_composition_and_image(named):
    b2 = named["b2"]
    swap = JoinMap(b2, b2, [0, 2, 1, 3])
    assert swap @ swap == JoinMap.identity(b2)
    assert swap.image_set() == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        swap.compose(JoinMap.identity(chain(1)))


def test_join_maps_enumeration_matches_filter():
    maps = join_maps(chain(1), chain(2))
    assert len(maps) == 3  # the generator can go to 0, 1 or 2


def test_opposite_swaps_tables(named):
    m3 = named["m3"]
    op = m3.opposite()
    assert op.bottom == m3.top and op.top == m3.bottom
    assert op.join == m3.meet and op.meet == m3.join
    assert op.opposite() == m3


def test_lattice_isomorphism_rejects(named):
    assert not lattices_isomorphic(named["m3"], named["n5"])
    assert not lattices_isomorphic(chain(2), chain(3))


def test_json_round_trip(named):
    for name, lat in named.items():
        blob = lattice_to_json(lat, names=[f"e{i}" for i in range(lat.n)])
        again = lattice_from_json(json.loads(json.dumps(blob)))
        assert again == lat
        assert blob["bottom"] == lat.bottom and blob["top"] == lat.top
        assert blob["distributive"] == is_distributive(lat)
        assert blob["irreducibles"] == irreducibles(lat)[0]


def test_json_reflexive_pairs_optional():
    a = lattice_from_json({"size": 2, "leq": [[0, 1]]})
    b = lattice_from_json({"size": 2, "leq": [[0, 0], [0, 1], [1, 1]]})
    assert a == b


def test_json_errors():
    with pytest.raises(LatticeError):
        lattice_from_json({"leq": []})
    with pytest.raises(LatticeError):
        lattice_from_json({"size": 2, "leq": [[0, 5]]})
    with pytest.raises(LatticeError):
        lattice_from_json({"size": 2, "leq": [[0, 1]], "names": ["only-one"]})
    with pytest.raises(LatticeError):
        lattice_from_json({"size": 2, "leq": [0, 1]})


def test_empty_poset_is_rejected_as_lattice():
    with pytest.raises(LatticeError):
        Lattice.from_poset(Poset.antichain(0))


def test_mobius_duality(named):
    for lat in named.values():
        mob = mobius(lat)
        mob_op = mobius(lat.opposite())
        assert all(mob_op[b, a] == v for (a, b), v in mob.items())
