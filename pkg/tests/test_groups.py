import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latplan.errors import (
    InvalidPermutation,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
)
from latplan.families import Cyclic, Dihedral, GeneralizedQuaternion, Modular, construct_family
from latplan.groups import (
    Subgroup,
    abelian_invariants,
    are_isomorphic,
    centralizer_of_subgroup,
    center_of_subgroup,
    conjugacy_classes,
    direct_product,
    from_cayley_table,
    from_permutations,
    generated_subgroup,
    group_from_json,
    group_to_json,
    invariants,
    is_nilpotent,
    min_generators,
    parse_cayley_text,
    subgroup_from_members,
)

from conftest import cyclic

# loops found by exhaustive search: Latin squares with identity 0 that fail
# exactly one of the group axioms
NONASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]
NO_INVERSE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


class TestFromCayleyTable:
    def test_trivial_group(self):
        g = from_cayley_table([[0]])
        assert g.order == 1
        assert g.identity == 0

    def test_z2(self):
        g = from_cayley_table([[0, 1], [1, 0]])
        assert g.order == 2
        assert g.identity == 0

    def test_identity_discovered_when_not_index_zero(self):
        # Z3 with elements relabeled so the identity sits at index 2
        g = from_cayley_table([[1, 2, 0], [2, 0, 1], [0, 1, 2]])
        assert g.identity == 2

    def test_corrupted_z3_is_rejected(self):
        with pytest.raises(NotLatinSquare):
            from_cayley_table([[0, 1, 2], [1, 0, 2], [2, 0, 1]])

    def test_out_of_range_entry(self):
        with pytest.raises(NotLatinSquare, match=r"cell \(1,1\)"):
            from_cayley_table([[0, 1], [1, 7]])

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            from_cayley_table([[1, 0, 2], [0, 2, 1], [2, 1, 0]])

    def test_no_inverse(self):
        with pytest.raises(NoInverse):
            from_cayley_table(NO_INVERSE_LOOP)

    def test_not_associative(self):
        with pytest.raises(NotAssociative):
            from_cayley_table(NONASSOCIATIVE_LOOP)

    def test_order_cap(self):
        with pytest.raises(OrderCapExceeded):
            from_cayley_table([[0, 1], [1, 0]], order_cap=1)

    def test_families_revalidate_cleanly(self):
        for g in (
            cyclic(12),
            construct_family(Dihedral(12)),
            construct_family(GeneralizedQuaternion(16)),
            construct_family(Modular(3, 3)),
        ):
            revalidated = from_cayley_table([list(r) for r in g.table], g.labels)
            assert revalidated.identity == g.identity


class TestFromPermutations:
    def test_symmetric_group_on_three_points(self):
        g = from_permutations(3, [[1, 2, 0], [1, 0, 2]])
        assert g.order == 6
        d6 = construct_family(Dihedral(6))
        assert are_isomorphic(g, d6)

    def test_four_cycle(self):
        g = from_permutations(4, [[1, 2, 3, 0]])
        assert g.order == 4
        assert abelian_invariants(g) == (4,)

    def test_alternating_group(self, a4):
        assert a4.order == 12

    def test_identity_is_element_zero(self, s4):
        assert s4.identity == 0
        assert s4.labels[0] == "e"

    def test_invalid_permutation(self):
        with pytest.raises(InvalidPermutation):
            from_permutations(3, [[0, 0, 1]])

    def test_closure_cap(self):
        with pytest.raises(OrderCapExceeded):
            from_permutations(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4]], order_cap=30)


class TestDirectProduct:
    def test_identity_factor(self, q8):
        prod = direct_product(cyclic(1), q8)
        assert are_isomorphic(prod, q8)

    def test_z4_times_z2(self, z4xz2):
        assert z4xz2.order == 8
        assert abelian_invariants(z4xz2) == (4, 2)

    def test_elementary_abelian(self, z2_cubed):
        assert z2_cubed.order == 8
        assert z2_cubed.spectrum == frozenset({1, 2})

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            direct_product(cyclic(30), cyclic(30), order_cap=512)


class TestInvariants:
    def test_q8(self, q8):
        inv = invariants(q8)
        assert inv.center.order == 2
        assert inv.spectrum == frozenset({1, 2, 4})
        assert inv.min_generators == 2
        assert not inv.is_abelian
        assert inv.is_nilpotent
        assert inv.abelian_invariants == ()

    def test_z30(self, z30):
        inv = invariants(z30)
        assert inv.abelian_invariants == (30,)
        assert inv.spectrum == frozenset({1, 2, 3, 5, 6, 10, 15, 30})
        assert inv.prime_spectrum == frozenset({2, 3, 5})
        assert inv.min_generators == 1

    def test_a4(self, a4):
        inv = invariants(a4)
        assert inv.center.order == 1
        assert inv.min_generators == 2
        assert not inv.is_nilpotent

    def test_min_generators_elementary_abelian(self, z2_cubed):
        assert min_generators(z2_cubed) == 3

    def test_min_generators_nonabelian_2group(self, q8):
        # Burnside basis: Q8 x Z2 needs three generators
        g = direct_product(q8, cyclic(2))
        assert min_generators(g) == 3

    def test_spectrum_divides_order(self):
        for g in (cyclic(24), construct_family(Dihedral(20))):
            assert all(g.order % k == 0 for k in g.spectrum)

    def test_nilpotency(self, s4, d8):
        assert is_nilpotent(d8)
        assert not is_nilpotent(s4)
        assert not is_nilpotent(construct_family(Dihedral(10)))


class TestConjugacy:
    def test_abelian_classes_are_singletons(self):
        assert all(len(c) == 1 for c in conjugacy_classes(cyclic(12)))

    def test_q8_class_sizes(self, q8):
        assert sorted(len(c) for c in conjugacy_classes(q8)) == [1, 1, 2, 2, 2]

    def test_d8_class_sizes(self, d8):
        assert sorted(len(c) for c in conjugacy_classes(d8)) == [1, 1, 2, 2, 2]

    def test_identity_class(self, s4):
        classes = conjugacy_classes(s4)
        assert (s4.identity,) in classes

    def test_classes_partition_the_group(self, s4):
        seen = sorted(x for c in conjugacy_classes(s4) for x in c)
        assert seen == list(range(s4.order))


class TestCentralizer:
    def test_trivial_subgroup(self, q8):
        triv = Subgroup.from_members([q8.identity])
        assert centralizer_of_subgroup(q8, triv).order == q8.order

    def test_abelian_group(self, z30):
        h = generated_subgroup(z30, [1])
        assert centralizer_of_subgroup(z30, h).order == z30.order

    def test_q8_inside_q16(self, q16):
        a = next(x for x in range(16) if q16.element_orders[x] == 8)
        a2 = q16.mul(a, a)
        b = next(
            x
            for x in range(16)
            if q16.element_orders[x] == 4
            and not generated_subgroup(q16, [a2]).contains(x)
        )
        h = generated_subgroup(q16, [a2, b])
        assert h.order == 8
        cent = centralizer_of_subgroup(q16, h)
        assert cent.order == 2
        assert cent == center_of_subgroup(q16, h)

    def test_rejects_non_subgroup(self, q8):
        with pytest.raises(NotASubgroup):
            centralizer_of_subgroup(q8, Subgroup.from_members([q8.identity, 3, 5]))

    def test_subgroup_from_members_requires_identity(self, q8):
        with pytest.raises(NotASubgroup):
            subgroup_from_members(q8, [3, 5])


class TestIsomorphism:
    def test_reflexive(self, q8, s4):
        assert are_isomorphic(q8, q8)
        assert are_isomorphic(s4, s4)

    def test_m8_is_d8(self, d8):
        m8 = construct_family(Modular(2, 3))
        assert are_isomorphic(m8, d8)
        assert are_isomorphic(d8, m8)

    def test_q8_is_not_d8(self, q8, d8):
        assert not are_isomorphic(q8, d8)

    def test_different_orders(self, q8):
        assert not are_isomorphic(q8, cyclic(16))

    def test_relabeled_group(self, qd16):
        perm = [(5 * i + 3) % 16 for i in range(16)]
        inverse = [perm.index(i) for i in range(16)]
        table = [
            [perm[qd16.table[inverse[a]][inverse[b]]] for b in range(16)]
            for a in range(16)
        ]
        shuffled = from_cayley_table(table)
        assert are_isomorphic(qd16, shuffled)

    def test_cap(self):
        with pytest.raises(OrderCapExceeded):
            are_isomorphic(cyclic(100), cyclic(100), order_cap=64)

    def test_abelian_same_order_different_type(self):
        assert not are_isomorphic(cyclic(8), direct_product(cyclic(4), cyclic(2)), order_cap=64)


@st.composite
def cyclic_factor_lists(draw):
    return draw(st.lists(st.integers(min_value=2, max_value=9), min_size=1, max_size=3))


class TestAbelianInvariantProperties:
    @settings(max_examples=40, deadline=None)
    @given(cyclic_factor_lists())
    def test_invariant_factors_characterize_products(self, factors):
        g = cyclic(factors[0])
        for n in factors[1:]:
            g = direct_product(g, cyclic(n))
        inv = abelian_invariants(g)
        prod = 1
        for d in inv:
            prod *= d
        assert prod == g.order
        # divisibility chain, largest first
        for a, b in zip(inv, inv[1:]):
            assert a % b == 0
        # the first factor is the group exponent
        assert inv[0] == max(g.spectrum)
        # rebuilding from the invariant factors gives an isomorphic group
        rebuilt = cyclic(inv[0])
        for d in inv[1:]:
            rebuilt = direct_product(rebuilt, cyclic(d))
        assert sorted(rebuilt.element_orders) == sorted(g.element_orders)


class TestSerialization:
    def test_json_round_trip(self, q8):
        data = group_to_json(q8)
        back = group_from_json(data)
        assert back.order == q8.order
        assert are_isomorphic(back, q8)
        assert data["source_spec"] == q8.source

    def test_cayley_text_parsing(self):
        text = "3\n0 1 2\n1 2 0\n2 0 1\n"
        table = parse_cayley_text(text)
        g = from_cayley_table(table)
        assert g.order == 3

    def test_cayley_text_row_count_mismatch(self):
        with pytest.raises(NotLatinSquare):
            parse_cayley_text("3\n0 1 2\n1 2 0\n")
