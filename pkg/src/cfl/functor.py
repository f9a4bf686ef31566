"""Evaluations of the lattice-valued functors on finite sets.

The free module on functions ``X -> T`` carries the relation action by
pointwise joins; the meet-side (star) action realizes the dual module.  This
module assembles the derived objects of interest: the subspace spanned by
functions missing an irreducible, the kernel linear system and its rank, the
duality pairing with its Mobius dual basis, the alternating generator of the
dual copy, and the permutation module with its relation action.

Function indexing is little-endian mixed-radix throughout: point ``i`` is
digit ``i`` of the index, base ``|T|``.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import namedtuple
from fractions import Fraction

from .exact import (ExactMatrix, PrimeField, RATIONALS, fast_int_rank,
                    modp_rank, subspace_equal)
from .lattices import CapExceeded, Lattice, ideal_lattice, irreducibles, mobius, r_of
from .morphisms import LinMorphism
from .relations import Correspondence, all_permutations, order_flags

DEFAULT_FUNCTION_CAP = 20000


def function_space_size(lattice: Lattice, points: int, cap: int = DEFAULT_FUNCTION_CAP) -> int:
    size = lattice.n ** points
    if size > cap:
        raise CapExceeded(f"{lattice.n}^{points} = {size} functions exceed cap {cap}")
    return size


def _decode(n: int, points: int, index: int):
    values = []
    for _ in range(points):
        index, v = divmod(index, n)
        values.append(v)
    return tuple(values)


def _encode(n: int, values) -> int:
    index = 0
    for v in reversed(values):
        index = index * n + v
    return index


class LatticeFunction:
    """A function from ``points`` indexed points into a lattice."""

    __slots__ = ("lattice", "points", "values")

    def __init__(self, lattice: Lattice, values):
        values = tuple(values)
        for v in values:
            if not 0 <= v < lattice.n:
                raise ValueError(f"value {v} outside lattice")
        self.lattice = lattice
        self.points = len(values)
        self.values = values

    @classmethod
    def from_index(cls, lattice: Lattice, points: int, index: int) -> "LatticeFunction":
        return cls(lattice, _decode(lattice.n, points, index))

    @property
    def index(self) -> int:
        return _encode(self.lattice.n, self.values)

    def __eq__(self, other):
        return (isinstance(other, LatticeFunction) and self.lattice == other.lattice
                and self.values == other.values)

    def __hash__(self):
        return hash((self.lattice, self.values))

    def __repr__(self):
        return f"LatticeFunction({list(self.values)})"


def all_functions(lattice: Lattice, points: int, cap: int = DEFAULT_FUNCTION_CAP):
    """All functions in index order (point 0 varies fastest)."""
    function_space_size(lattice, points, cap)
    for rev in itertools.product(range(lattice.n), repeat=points):
        yield LatticeFunction(lattice, rev[::-1])


def act(r: Correspondence, f: LatticeFunction) -> LatticeFunction:
    """Pointwise-join action: target point ``y`` gets the join of the values
    at its related source points (the empty join is the bottom)."""
    if r.src_size != f.points:
        raise ValueError(f"relation expects {r.src_size} points, function has {f.points}")
    lat = f.lattice
    return LatticeFunction(lat, (lat.join_many(f.values[x] for x in _bits(row))
                                 for row in r.rows))


def star_act(q: Correspondence, f: LatticeFunction) -> LatticeFunction:
    """Pointwise-meet action (the join of the opposite lattice); the empty
    meet is the top."""
    if q.src_size != f.points:
        raise ValueError(f"relation expects {q.src_size} points, function has {f.points}")
    lat = f.lattice
    return LatticeFunction(lat, (lat.meet_many(f.values[x] for x in _bits(row))
                                 for row in q.rows))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ModVec:
    """An element of the free module on functions ``X -> T``: a dense
    rational coefficient vector aligned with the function index order."""

    __slots__ = ("lattice", "points", "coeffs")

    def __init__(self, lattice: Lattice, points: int, coeffs=None,
                 cap: int = DEFAULT_FUNCTION_CAP):
        size = function_space_size(lattice, points, cap)
        if coeffs is None:
            coeffs = [Fraction(0)] * size
        else:
            coeffs = [Fraction(c) for c in coeffs]
            if len(coeffs) != size:
                raise ValueError(f"expected {size} coefficients, got {len(coeffs)}")
        self.lattice = lattice
        self.points = points
        self.coeffs = coeffs

    @classmethod
    def basis_vector(cls, f: LatticeFunction) -> "ModVec":
        v = cls(f.lattice, f.points)
        v.coeffs[f.index] = Fraction(1)
        return v

    def nonzero(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield i, c

    def functions(self):
        for i, c in self.nonzero():
            yield LatticeFunction.from_index(self.lattice, self.points, i), c

    def __add__(self, other):
        if (self.lattice, self.points) != (other.lattice, other.points):
            raise ValueError("module mismatch")
        return ModVec(self.lattice, self.points,
                      [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return ModVec(self.lattice, self.points, [scalar * c for c in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, ModVec) and self.lattice == other.lattice
                and self.points == other.points and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        parts = [f"{c}*{list(_decode(self.lattice.n, self.points, i))}"
                 for i, c in self.nonzero()]
        return "ModVec(" + " + ".join(parts or ["0"]) + ")"


def _linear_action(action, r: Correspondence, v: ModVec) -> ModVec:
    n = v.lattice.n
    out = ModVec(v.lattice, r.dst_size)
    for i, c in v.nonzero():
        f = LatticeFunction(v.lattice, _decode(n, v.points, i))
        out.coeffs[action(r, f).index] += c
    return out


def act_mod(r: Correspondence, v: ModVec) -> ModVec:
    return _linear_action(act, r, v)


def star_act_mod(q: Correspondence, v: ModVec) -> ModVec:
    return _linear_action(star_act, q, v)


def apply_lin(alpha: LinMorphism, v: ModVec) -> ModVec:
    """Push a module element through a formal sum of join-maps, basis
    function by basis function."""
    if alpha.src != v.lattice:
        raise ValueError("morphism source does not match the module lattice")
    out = ModVec(alpha.dst, v.points)
    nd = alpha.dst.n
    for i, c in v.nonzero():
        values = _decode(v.lattice.n, v.points, i)
        for m, a in alpha.terms.items():
            out.coeffs[_encode(nd, tuple(m.images[t] for t in values))] += c * a
    return out


IrrData = namedtuple("IrrData", [
    "elems",      # irreducible elements of T, ascending
    "sub",        # their full subposet (order R), on indices 0..|E|-1
    "rop_rows",   # rows of R-opposite as masks over E indices
    "down_irr",   # for each t in T: mask of irreducibles below t
    "up_masks",   # for each irreducible: mask of its principal upper ideal
    "iup",        # lattice of upper ideals of (E, R)
    "iup_enc",    # their subset encodings
    "idown",      # lattice of lower ideals of (E, R)
    "idown_enc",
])


@functools.lru_cache(maxsize=None)
def irr_data(lattice: Lattice) -> IrrData:
    elems, sub = irreducibles(lattice)
    down_irr = []
    for t in range(lattice.n):
        mask = 0
        for i, e in enumerate(elems):
            if lattice.le(e, t):
                mask |= 1 << i
        down_irr.append(mask)
    iup, iup_enc = ideal_lattice(sub, "upper")
    idown, idown_enc = ideal_lattice(sub, "lower")
    return IrrData(tuple(elems), sub, tuple(sub.down), tuple(down_irr),
                   tuple(sub.up), iup, iup_enc, idown, idown_enc)


def gamma_corr(lattice: Lattice, f: LatticeFunction) -> Correspondence:
    """The correspondence pairing each point with the irreducibles below its
    value."""
    data = irr_data(lattice)
    return Correspondence(f.points, len(data.elems),
                          (data.down_irr[v] for v in f.values))


def h_quotient_basis(lattice: Lattice, points: int, cap: int = DEFAULT_FUNCTION_CAP):
    """Indices of the functions whose image contains every irreducible.

    These represent the basis of the quotient by the span of the remaining
    functions; the list is empty when ``points`` is too small to cover."""
    data = irr_data(lattice)
    size = function_space_size(lattice, points, cap)
    pos = {e: i for i, e in enumerate(data.elems)}
    full = (1 << len(data.elems)) - 1
    n = lattice.n
    out = []
    for index in range(size):
        seen = 0
        for v in _decode(n, points, index):
            i = pos.get(v)
            if i is not None:
                seen |= 1 << i
        if seen == full:
            out.append(index)
    return out


def retraction_exists(r: Correspondence, s: Correspondence) -> bool:
    """Whether some correspondence pulls ``s`` back onto the order ``r``.

    ``s`` must already absorb ``r`` on the right.  Row by row, the union of
    all rows of ``s`` contained in the target row is the largest candidate,
    so feasibility reduces to one union per element."""
    if not order_flags(r).is_order:
        raise ValueError("r must be an order relation")
    if s.src_size != r.dst_size:
        raise ValueError("s must target the ordered set")
    if s.compose(r) != s:
        raise ValueError("precondition failed: s does not absorb the order")
    for e in range(r.dst_size):
        target = r.rows[e]
        union = 0
        for row in s.rows:
            if row & ~target == 0:
                union |= row
        if union != target:
            return False
    return True


# --- the kernel linear system ------------------------------------------------


def _product_rows_equal(enc_psi, down_phi, rop_rows, n_irr: int) -> bool:
    # Rows of (gamma_psi)^op (gamma_phi) against the opposite order, early exit.
    for e in range(n_irr):
        acc = 0
        bit = 1 << e
        for mask, down in zip(enc_psi, down_phi):
            if mask & bit:
                acc |= down
        if acc != rop_rows[e]:
            return False
    return True


def theta_conditions(lattice: Lattice, phi: LatticeFunction, psi: LatticeFunction):
    """The six equivalent membership tests for one (function, ideal-function)
    pair; returned as six independently computed booleans."""
    data = irr_data(lattice)
    if psi.lattice != data.iup:
        raise ValueError("psi must take values in the upper-ideal lattice")
    if phi.points != psi.points:
        raise ValueError("point count mismatch")
    k = len(data.elems)
    enc_psi = [data.iup_enc[v] for v in psi.values]
    down_phi = [data.down_irr[v] for v in phi.values]

    # q = product correspondence on the irreducibles
    q_rows = []
    for e in range(k):
        acc = 0
        for mask, down in zip(enc_psi, down_phi):
            if mask >> e & 1:
                acc |= down
        q_rows.append(acc)

    join_vals = [lattice.join_many(phi.values[x] for x in range(phi.points)
                                   if enc_psi[x] >> e & 1)
                 for e in range(k)]
    cond_a = all(join_vals[e] == data.elems[e] for e in range(k))

    qi_vals = [lattice.join_many(data.elems[f] for f in _bits(q_rows[e]))
               for e in range(k)]
    cond_b = all(qi_vals[e] == data.elems[e] for e in range(k))

    cond_c = all(q_rows[e] >> e & 1 and q_rows[e] & ~data.rop_rows[e] == 0
                 for e in range(k))

    cond_d = all(q_rows[e] == data.rop_rows[e] for e in range(k))

    wedge = [lattice.meet_many(data.elems[i] for i in _bits(enc_psi[x]))
             for x in range(phi.points)]
    cond_e = (all(lattice.le(phi.values[x], wedge[x]) for x in range(phi.points))
              and all(any(phi.values[x] == data.elems[e]
                          and enc_psi[x] == data.up_masks[e]
                          for x in range(phi.points))
                      for e in range(k)))

    first_f = all(lattice.le(phi.values[x], data.elems[e])
                  for x in range(phi.points) for e in _bits(enc_psi[x]))
    second_f = True
    for e in range(k):
        union = 0
        for x in range(phi.points):
            if phi.values[x] == data.elems[e]:
                union |= enc_psi[x]
        if union != data.up_masks[e]:
            second_f = False
            break
    cond_f = first_f and second_f

    return cond_a, cond_b, cond_c, cond_d, cond_e, cond_f


def theta_matrix(lattice: Lattice, points: int, ring=RATIONALS,
                 cap: int = DEFAULT_FUNCTION_CAP) -> ExactMatrix:
    """The full 0/1 kernel system: rows over ideal-valued functions, columns
    over lattice-valued functions, a one where the product recovers the
    opposite order."""
    data = irr_data(lattice)
    n_cols = function_space_size(lattice, points, cap)
    n_rows = function_space_size(data.iup, points, cap)
    k = len(data.elems)
    cols_down = [[data.down_irr[v] for v in _decode(lattice.n, points, i)]
                 for i in range(n_cols)]
    rows = []
    for ri in range(n_rows):
        enc_psi = [data.iup_enc[v] for v in _decode(data.iup.n, points, ri)]
        rows.append([1 if _product_rows_equal(enc_psi, down, data.rop_rows, k) else 0
                     for down in cols_down])
    return ExactMatrix(rows, cols=n_cols, ring=ring)


def theta_rank(lattice: Lattice, points: int, ring=RATIONALS,
               cap: int = DEFAULT_FUNCTION_CAP) -> int:
    """Rank of the kernel system, equal to the rank of the fundamental
    quotient at ``points``.

    Columns of functions missing an irreducible and rows of ideal functions
    missing a principal upper ideal are identically zero, so both are pruned
    before elimination.
    """
    data = irr_data(lattice)
    function_space_size(lattice, points, cap)
    function_space_size(data.iup, points, cap)
    k = len(data.elems)
    elem_mask = [None] * lattice.n
    for i, e in enumerate(data.elems):
        elem_mask[e] = 1 << i

    cols = []
    for index in range(lattice.n ** points):
        values = _decode(lattice.n, points, index)
        seen = 0
        for v in values:
            m = elem_mask[v]
            if m:
                seen |= m
        if seen == (1 << k) - 1:
            cols.append([data.down_irr[v] for v in values])
    if not cols:
        return 0

    needed = set(data.up_masks)
    rows = []
    for index in range(data.iup.n ** points):
        enc_psi = [data.iup_enc[v] for v in _decode(data.iup.n, points, index)]
        if not needed <= set(enc_psi):
            continue
        rows.append([1 if _product_rows_equal(enc_psi, down, data.rop_rows, k) else 0
                     for down in cols])
    if isinstance(ring, PrimeField):
        return modp_rank(rows, ring.p)
    return fast_int_rank(rows)


# --- duality ------------------------------------------------------------------


def pairing(phi: LatticeFunction, psi: LatticeFunction) -> int:
    """One when the first function is pointwise below the second, else zero."""
    if phi.lattice != psi.lattice or phi.points != psi.points:
        raise ValueError("pairing needs functions on the same lattice and points")
    lat = phi.lattice
    return 1 if all(lat.le(a, b) for a, b in zip(phi.values, psi.values)) else 0


def pairing_matrix(lattice: Lattice, points: int, ring=RATIONALS,
                   cap: int = DEFAULT_FUNCTION_CAP) -> ExactMatrix:
    size = function_space_size(lattice, points, cap)
    n = lattice.n
    values = [_decode(n, points, i) for i in range(size)]
    rows = [[1 if all(lattice.le(a, b) for a, b in zip(v, w)) else 0
             for w in values] for v in values]
    return ExactMatrix(rows, cols=size, ring=ring)


def dual_star(phi: LatticeFunction) -> ModVec:
    """The Mobius dual of a basis function, as an element of the dual-side
    module (coefficients on functions viewed against the opposite order)."""
    lat = phi.lattice
    mob = mobius(lat)
    options = []
    for v in phi.values:
        opts = [(s, mob[s, v]) for s in _bits(lat.poset.down[v]) if mob[s, v]]
        options.append(opts)
    out = ModVec(lat, phi.points)
    for choice in itertools.product(*options):
        values = tuple(s for s, _ in choice)
        coeff = 1
        for _, w in choice:
            coeff *= w
        out.coeffs[_encode(lat.n, values)] += coeff
    return out


def gamma_t(lattice: Lattice) -> ModVec:
    """The alternating generator of the dual copy, at the irreducibles.

    The signed sum over subsets of irreducibles of the functions lowering the
    chosen ones to their unique maximal lower neighbour."""
    data = irr_data(lattice)
    k = len(data.elems)
    lowered = [r_of(lattice, e) for e in data.elems]
    out = ModVec(lattice, k)
    for mask in range(1 << k):
        values = tuple(lowered[i] if mask >> i & 1 else data.elems[i] for i in range(k))
        sign = -1 if mask.bit_count() % 2 else 1
        out.coeffs[_encode(lattice.n, values)] += sign
    return out


def gamma_generators(lattice: Lattice, points: int, cap: int = DEFAULT_FUNCTION_CAP):
    """Integer coefficient vectors spanning the dual-side copy at ``points``.

    Generators are indexed by upper-ideal-valued functions; acting on the
    alternating generator by the matching correspondence and expanding."""
    data = irr_data(lattice)
    size = function_space_size(lattice, points, cap)
    function_space_size(data.iup, points, cap)
    k = len(data.elems)
    lowered = [r_of(lattice, e) for e in data.elems]
    eta = []
    for mask in range(1 << k):
        values = tuple(lowered[i] if mask >> i & 1 else data.elems[i] for i in range(k))
        eta.append((values, -1 if mask.bit_count() % 2 else 1))

    seen = set()
    out = []
    for index in range(data.iup.n ** points):
        rows = tuple(data.iup_enc[v] for v in _decode(data.iup.n, points, index))
        if rows in seen:
            continue
        seen.add(rows)
        vec = [0] * size
        for values, sign in eta:
            acted = tuple(lattice.meet_many(values[e] for e in _bits(row))
                          for row in rows)
            vec[_encode(lattice.n, acted)] += sign
        out.append(tuple(vec))
    return out


def gamma_span_rank(lattice: Lattice, points: int, ring=RATIONALS,
                    cap: int = DEFAULT_FUNCTION_CAP) -> int:
    """Rank of the span of the acted generators inside the dual-side module."""
    gens = gamma_generators(lattice, points, cap)
    if isinstance(ring, PrimeField):
        return modp_rank(gens, ring.p)
    return fast_int_rank(gens)


def orth_check(lattice: Lattice, points: int, ring=RATIONALS,
               cap: int = DEFAULT_FUNCTION_CAP) -> bool:
    """Whether the pairing-orthogonal complement of the dual-side copy equals
    the nullspace of the kernel system, as subspaces."""
    size = function_space_size(lattice, points, cap)
    gens = gamma_generators(lattice, points, cap)
    n = lattice.n
    values = [_decode(n, points, i) for i in range(size)]
    func_rows = []
    for g in gens:
        row = []
        for v in values:
            acc = 0
            for j, c in enumerate(g):
                if c and all(lattice.le(a, b) for a, b in zip(v, values[j])):
                    acc += c
            row.append(acc)
        func_rows.append(row)
    complement = ExactMatrix(func_rows, cols=size, ring=ring).nullspace()
    kernel = theta_matrix(lattice, points, ring, cap).nullspace()
    return subspace_equal(complement, kernel, size, ring)


# --- the permutation module ---------------------------------------------------


def perm_basis(e_size: int):
    """Permutations of ``0..e_size-1`` in lexicographic order."""
    return list(itertools.permutations(range(e_size)))


class FundElement:
    """An element of the rank-``|E|!`` module with basis the permutations."""

    __slots__ = ("e_size", "coeffs")

    def __init__(self, e_size: int, coeffs=None):
        size = math.factorial(e_size)
        if coeffs is None:
            coeffs = [Fraction(0)] * size
        else:
            coeffs = [Fraction(c) for c in coeffs]
            if len(coeffs) != size:
                raise ValueError(f"expected {size} coefficients")
        self.e_size = e_size
        self.coeffs = coeffs

    @classmethod
    def basis_vector(cls, e_size: int, sigma) -> "FundElement":
        v = cls(e_size)
        v.coeffs[perm_basis(e_size).index(tuple(sigma))] = Fraction(1)
        return v

    def __eq__(self, other):
        return (isinstance(other, FundElement) and self.e_size == other.e_size
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        basis = perm_basis(self.e_size)
        parts = [f"{c}*{list(basis[i])}" for i, c in enumerate(self.coeffs) if c]
        return "FundElement(" + " + ".join(parts or ["0"]) + ")"


def fund_act(q: Correspondence, v: FundElement, r: Correspondence) -> FundElement:
    """Action of a relation on the permutation module attached to an order.

    A basis permutation survives exactly when some (then unique) permutation
    squeezes the relation between the diagonal and the conjugated order; the
    basis element is then moved by that permutation."""
    if not order_flags(r).is_order:
        raise ValueError("r must be an order relation")
    e = v.e_size
    if q.dst_size != e or q.src_size != e or r.dst_size != e:
        raise ValueError("size mismatch")
    basis = perm_basis(e)
    taus = [(p.images, p.inverse().images) for p in all_permutations(e)]
    out = FundElement(e)
    for i, c in enumerate(v.coeffs):
        if not c:
            continue
        sigma = basis[i]
        sigma_inv = [0] * e
        for x, y in enumerate(sigma):
            sigma_inv[y] = x
        found = None
        for tau, tau_inv in taus:
            if not all(q.rows[tau[x]] >> x & 1 for x in range(e)):
                continue
            ok = True
            for y in range(e):
                row = q.rows[y]
                ty = sigma_inv[tau_inv[y]]
                for x in _bits(row):
                    if not r.rows[ty] >> sigma_inv[x] & 1:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                assert found is None, "squeezing permutation is not unique"
                found = tau
        if found is not None:
            moved = tuple(found[sigma[x]] for x in range(e))
            out.coeffs[basis.index(moved)] += c
    return out


def fixed_rank(target: Lattice, r: Correspondence,
               cap: int = DEFAULT_FUNCTION_CAP) -> int:
    """Rank of the idempotent action of the opposite order on functions from
    the ordered set into ``target``: the number of fixed basis functions."""
    if not order_flags(r).is_order:
        raise ValueError("r must be an order relation")
    points = r.dst_size
    function_space_size(target, points, cap)
    rop = r.opposite()
    count = 0
    for f in all_functions(target, points, cap):
        if act(rop, f) == f:
            count += 1
    return count


def total_rank_formula(n: int, points: int) -> int:
    """Alternating binomial count of surjections-onto-the-irreducibles for a
    total order of height ``n``."""
    return sum((-1) ** (n - i) * math.comb(n, i) * (i + 1) ** points
               for i in range(n + 1))
