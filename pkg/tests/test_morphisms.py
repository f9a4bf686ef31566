import itertools
import math
from fractions import Fraction

import pytest

from cfl.catalog import named_lattices
from cfl.lattices import JoinMap, NotJoinPreserving, chain, join_maps, mobius
from cfl.morphisms import (ChainTuple, LinMorphism, TermNotInBasis, adjoint_op,
                           beta, check_join_map, e_t, epsilon, f_dc, j_of_tuple,
                           lambda_of_tuple, lin_to_vector, max_tuple_size,
                           p_tuples, pi_of_tuple, rho_y, tot_basis, y_tuples)


@pytest.fixture(scope="module")
def named():
    return named_lattices()


def test_check_join_map(named):
    b2 = named["b2"]
    assert check_join_map(b2, b2, range(4)) == JoinMap.identity(b2)
    check_join_map(b2, b2, [0, 0, 0, 0])
    with pytest.raises(NotJoinPreserving) as err:
        check_join_map(b2, b2, [0, 1, 2, 2])
    assert err.value.pair == (1, 2)


def test_lin_morphism_algebra():
    ident = LinMorphism.identity(chain(1))
    drop = LinMorphism.of_map(rho_y(1, []))
    assert ident @ drop == drop
    assert 2 * ident @ (3 * drop) == 6 * (ident @ drop)
    assert ident - ident == LinMorphism.zero(chain(1), chain(1))
    assert (ident + drop).terms[rho_y(1, [])] == Fraction(1)


def test_lin_morphism_merges_terms():
    drop = LinMorphism.of_map(rho_y(1, []))
    total = drop + drop
    assert total == 2 * drop
    assert (total - 2 * drop).is_zero()


def test_adjoint_example():
    f = JoinMap(chain(2), chain(1), [0, 1, 1])
    g = adjoint_op(f)
    assert g.images == (0, 2)
    assert g.src == chain(1).opposite() and g.dst == chain(2).opposite()
    assert adjoint_op(JoinMap.identity(chain(2))) == JoinMap.identity(chain(2).opposite())


def test_adjoint_adjunction_and_reversal(named):
    lats = [chain(1), chain(2), named["b2"]]
    for src in lats:
        for dst in lats:
            for f in join_maps(src, dst):
                g = adjoint_op(f)
                for t1 in range(src.n):
                    for t2 in range(dst.n):
                        assert dst.le(f(t1), t2) == src.le(t1, g(t2))
                assert adjoint_op(g) == f
    b2 = named["b2"]
    maps = join_maps(b2, b2)
    for f in maps[:8]:
        for g in maps[:8]:
            assert adjoint_op(g @ f) == adjoint_op(f) @ adjoint_op(g)


def test_chain_tuples(named):
    b2 = named["b2"]
    assert [t.entries for t in p_tuples(b2, 0)] == [()]
    assert [t.entries for t in p_tuples(b2, 1)] == [(0,), (1,), (2,)]
    assert [t.entries for t in p_tuples(b2, 2)] == [(0, 1), (0, 2)]
    assert [t.entries for t in y_tuples(b2, 2)] == [(1, 3), (2, 3)]
    assert max_tuple_size(b2) == 2
    assert max_tuple_size(chain(3)) == 3
    with pytest.raises(ValueError):
        ChainTuple(b2, (3,), "P")  # contains the top
    with pytest.raises(ValueError):
        ChainTuple(b2, (1, 2), "P")  # not a chain
    with pytest.raises(ValueError):
        ChainTuple(b2, (0,), "Y")  # contains the bottom


def test_pi_of_tuple_examples(named):
    b2 = named["b2"]
    pi = pi_of_tuple(ChainTuple(b2, (1,), "P"))
    assert pi.images == (0, 0, 1, 1)
    for n in range(4):
        full = ChainTuple(chain(n), tuple(range(n)), "P")
        assert pi_of_tuple(full) == JoinMap.identity(chain(n))
        empty = ChainTuple(chain(n), (), "P")
        assert pi_of_tuple(empty).images == (0,) * (n + 1)
        assert pi_of_tuple(full).is_surjective()


def test_j_of_tuple_two_chain():
    j = j_of_tuple(ChainTuple(chain(2), (0,), "P"))
    want = {JoinMap(chain(1), chain(2), (0, 1)): Fraction(1),
            JoinMap(chain(1), chain(2), (0, 0)): Fraction(-1)}
    assert j.terms == want  # the Mobius-zero image at the top is dropped


def test_j_of_tuple_empty():
    j = j_of_tuple(ChainTuple(chain(2), (), "P"))
    assert j.terms == {JoinMap(chain(0), chain(2), (0,)): Fraction(1)}


def test_j_of_full_chain_tuple_is_the_top_idempotent():
    for n in range(4):
        full = ChainTuple(chain(n), tuple(range(n)), "P")
        assert j_of_tuple(full) == epsilon(n)


def test_rho_y():
    assert rho_y(3, [1, 2, 3]) == JoinMap.identity(chain(3))
    assert rho_y(1, []).images == (0, 0)
    assert rho_y(3, [2]).images == (0, 0, 2, 2)
    with pytest.raises(ValueError):
        rho_y(2, [3])


def test_quotient_after_section_formula(named):
    for lat in (named["b2"], named["m3"], chain(3)):
        for n in range(min(3, max_tuple_size(lat)) + 1):
            for b in p_tuples(lat, n):
                left = LinMorphism.of_map(pi_of_tuple(b)) @ j_of_tuple(b)
                sign = -1 if n % 2 else 1
                want = LinMorphism.zero(chain(n), chain(n))
                for k in range(n + 1):
                    for ys in itertools.combinations(range(1, n + 1), k):
                        want = want + (sign * (-1) ** k) * LinMorphism.of_map(rho_y(n, ys))
                assert left == want


def test_f_dc_idempotents_and_products(named):
    m3 = named["m3"]
    tuples = [t for n in range(3) for t in p_tuples(m3, n)]
    for b in tuples:
        fbb = f_dc(b, b)
        assert fbb @ fbb == fbb
    d, c = tuples[1], tuples[2]
    assert f_dc(d, c) @ f_dc(c, d) == f_dc(d, d)
    with pytest.raises(ValueError):
        f_dc(tuples[0], tuples[1])


def test_beta_partition_of_identity():
    for n in range(5):
        blocks = [beta(n, m) for m in range(n + 1)]
        total = LinMorphism.zero(chain(n), chain(n))
        for b in blocks:
            total = total + b
        assert total == LinMorphism.identity(chain(n))
        for l, bl in enumerate(blocks):
            for m, bm in enumerate(blocks):
                expect = bl if l == m else LinMorphism.zero(chain(n), chain(n))
                assert bl @ bm == expect


def test_epsilon_examples():
    assert epsilon(1) == (LinMorphism.identity(chain(1))
                          - LinMorphism.of_map(rho_y(1, [])))
    assert epsilon(0) == LinMorphism.identity(chain(0))


def test_top_idempotent_spans_a_line():
    # right multiples of the top block stay on the line it spans
    for n in range(1, 4):
        eps = epsilon(n)
        ref_map, ref_coeff = next(iter(eps.terms.items()))
        for m in tot_basis(chain(n)):
            prod = eps @ LinMorphism.of_map(m)
            if prod.is_zero():
                continue
            c = prod.terms.get(ref_map, Fraction(0)) / ref_coeff
            assert prod == c * eps


def test_e_t_is_the_identity_on_chains():
    for n in range(4):
        assert e_t(chain(n)) == LinMorphism.identity(chain(n))


def test_e_t_idempotent_and_one_point(named):
    one = chain(0)
    assert e_t(one) == LinMorphism.identity(one)
    for lat in (named["b2"], named["m3"]):
        unit = e_t(lat)
        assert unit @ unit == unit


def test_tot_basis_counts(named):
    for n in range(5):
        basis = tot_basis(chain(n))
        assert len(basis) == math.comb(2 * n, n)
        assert len(set(basis)) == len(basis)
    b2 = named["b2"]
    sizes = [len(p_tuples(b2, n)) for n in range(max_tuple_size(b2) + 1)]
    assert sizes == [1, 3, 2]
    assert [len(y_tuples(b2, n)) for n in range(3)] == sizes
    assert len(tot_basis(b2)) == sum(s * s for s in sizes)


def test_tot_basis_is_exactly_the_chain_image_endos(named):
    for lat in (chain(2), named["b2"], named["m3"]):
        brute = {m for m in join_maps(lat, lat)
                 if all(lat.le(a, b) or lat.le(b, a)
                        for a in m.image_set() for b in m.image_set())}
        assert set(tot_basis(lat)) == brute


def test_lambda_of_tuple(named):
    b2 = named["b2"]
    lam = lambda_of_tuple(ChainTuple(b2, (1, 3), "Y"))
    assert lam.images == (0, 1, 3)
    with pytest.raises(ValueError):
        lambda_of_tuple(ChainTuple(b2, (1,), "P"))


def test_lin_to_vector(named):
    b2 = named["b2"]
    basis = tot_basis(b2)
    mob = mobius(b2)
    for b in p_tuples(b2, 1):
        vec = lin_to_vector(f_dc(b, b), basis)
        assert all(v.denominator == 1 for v in vec)
        assert any(v != 0 for v in vec)
        values = sorted({abs(v) for v in vec if v})
        assert values == [1] or values == [1, 2]
    zero = LinMorphism.zero(b2, b2)
    assert lin_to_vector(zero, basis) == [0] * len(basis)
    stranger = LinMorphism.identity(chain(1))
    with pytest.raises(TermNotInBasis):
        lin_to_vector(stranger, basis)


def test_adjoint_of_chain_image_factorization(named):
    for lat in (chain(2), named["b2"], named["n5"]):
        op = lat.opposite()
        for n in range(max_tuple_size(lat) + 1):
            for u in p_tuples(lat, n):
                for v in y_tuples(lat, n):
                    m = lambda_of_tuple(v) @ pi_of_tuple(u)
                    urev = ChainTuple(op, tuple(reversed(u.entries)), "Y")
                    vrev = ChainTuple(op, tuple(reversed(v.entries)), "P")
                    assert adjoint_op(m) == lambda_of_tuple(urev) @ pi_of_tuple(vrev)
