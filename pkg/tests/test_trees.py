import math

import pytest

from treecolor import (
    Profile,
    TreeParseError,
    ancestor,
    canonical_form,
    complete_to_full,
    depth_profile,
    enumerate_trees,
    height_profile,
    parse_tree,
    perfect_binary_tree,
    serialize_tree,
    siblings,
    strip_leaves,
    subtree_leaf_count,
)

T_R = "((()()()))"  # root - single child - three leaves
WORKED_EXAMPLE = "((()())((()))())"  # depth profile (1,3,3,1), height (4,2,1,1)
PERFECT_2 = "((()())(()()))"


def catalan_oracle(n):
    # straight from the closed form
    return math.factorial(2 * n) // math.factorial(n + 1) // math.factorial(n)


def brute_force_rooted_classes(n):
    # independent oracle: every preorder parent array, deduped by canonical form
    def arrays(k):
        if k == n:
            yield []
            return
        for rest in arrays(k + 1):
            yield from ([p] + rest for p in range(k))

    forms = set()
    for arr in arrays(1):
        children = [[] for _ in range(n)]
        for i, p in enumerate(arr, start=1):
            children[p].append(i)

        def encode(v):
            return "(" + "".join(sorted(encode(c) for c in children[v])) + ")"

        forms.add(encode(0))
    return forms


class TestParse:
    def test_single_node(self):
        t = parse_tree("()")
        assert t.n == 1 and t.root_height == 0

    def test_t_r_structure(self):
        t = parse_tree(T_R)
        assert t.n == 5
        assert height_profile(t).counts == (3, 1, 1)
        assert len(t.children[0]) == 1  # root carries a single child

    def test_perfect_by_text(self):
        t = parse_tree(PERFECT_2)
        assert t.n == 7 and t.root_height == 2 and t.is_full_binary

    def test_whitespace_ignored(self):
        assert parse_tree(" ( ( ) )\n") == parse_tree("(())")

    @pytest.mark.parametrize(
        "text,offset",
        [
            ("", 0),
            ("((", 2),
            (")", 0),
            ("()x", 2),
            ("()()", 2),
            ("(() ", 4),
        ],
    )
    def test_errors_carry_offset(self, text, offset):
        with pytest.raises(TreeParseError) as err:
            parse_tree(text)
        assert err.value.offset == offset

    def test_preorder_ids(self):
        t = parse_tree("((())())")
        assert t.parent == (None, 0, 1, 0)
        assert t.depth == (0, 1, 2, 1)


class TestSerialize:
    @pytest.mark.parametrize("text", ["()", "((()))", T_R, WORKED_EXAMPLE, PERFECT_2])
    def test_round_trip(self, text):
        assert serialize_tree(parse_tree(text)) == text

    def test_round_trip_enumerated(self):
        for n in range(1, 7):
            for t in enumerate_trees("rooted", n):
                assert parse_tree(serialize_tree(t)) == t


class TestProfiles:
    def test_worked_example(self):
        t = parse_tree(WORKED_EXAMPLE)
        assert depth_profile(t).counts == (1, 3, 3, 1)
        assert height_profile(t).counts == (4, 2, 1, 1)

    def test_perfect_h2(self):
        t = parse_tree(PERFECT_2)
        assert height_profile(t).counts == (4, 2, 1)
        assert depth_profile(t).counts == (1, 2, 4)

    def test_single_node(self):
        t = parse_tree("()")
        assert height_profile(t).counts == (1,)
        assert depth_profile(t).counts == (1,)

    def test_perfect_powers_of_two(self):
        t = perfect_binary_tree(4)
        assert depth_profile(t).counts == (1, 2, 4, 8, 16)
        assert height_profile(t).counts == (16, 8, 4, 2, 1)

    def test_sums_and_monotonicity(self):
        for n in range(1, 9):
            for t in enumerate_trees("rooted", n):
                hp, dp = height_profile(t), depth_profile(t)
                assert hp.n == dp.n == t.n
                assert len(hp.counts) == len(dp.counts) == t.root_height + 1
                assert all(a >= b for a, b in zip(hp.counts, hp.counts[1:]))

    def test_depth_plus_height_bounded(self):
        for n in range(1, 8):
            for t in enumerate_trees("rooted", n):
                h = t.root_height
                assert all(t.depth[v] + t.height[v] <= h for v in range(t.n))
                assert any(
                    t.depth[v] + t.height[v] == h and not t.children[v]
                    for v in range(t.n)
                )

    def test_profile_validation(self):
        with pytest.raises(ValueError):
            Profile((1, 2), "height")  # increasing by height
        with pytest.raises(ValueError):
            Profile((1, 0, 1), "depth")
        with pytest.raises(ValueError):
            Profile((1,), "width")


class TestQueries:
    def test_siblings(self):
        t = parse_tree(T_R)
        assert siblings(t, 1) == ()  # the root's only child
        p = parse_tree(PERFECT_2)
        assert siblings(p, 1) == (4,)
        assert siblings(p, 0) == ()

    def test_ancestor(self):
        t = parse_tree(T_R)
        assert ancestor(t, 0, 0) == 0
        assert ancestor(t, 2, t.depth[2]) == 0
        assert ancestor(t, 2, t.depth[2] + 1) is None
        with pytest.raises(ValueError):
            ancestor(t, 0, -1)
        with pytest.raises(ValueError):
            ancestor(t, 99, 0)

    def test_subtree_leaf_count(self):
        p = parse_tree(PERFECT_2)
        assert subtree_leaf_count(p, 0) == 4
        assert subtree_leaf_count(p, 1) == 2
        assert subtree_leaf_count(p, 2) == 1


class TestBijection:
    def test_lone_root_completes(self):
        assert serialize_tree(complete_to_full(parse_tree("()"))) == "(()())"

    def test_strip_rejects_lone_root(self):
        with pytest.raises(ValueError):
            strip_leaves(parse_tree("()"))

    def test_strip_rejects_non_full(self):
        with pytest.raises(ValueError):
            strip_leaves(parse_tree("(())"))

    def test_complete_rejects_non_binary(self):
        with pytest.raises(ValueError):
            complete_to_full(parse_tree("(()()())"))

    def test_five_node_example(self):
        # an 11-node full binary tree collapses to its 5 internal nodes
        full = parse_tree("(((()())(()()))(()()))")
        assert full.n == 11 and full.is_full_binary
        skeleton = strip_leaves(full)
        assert skeleton.n == 5 and skeleton.is_binary
        assert serialize_tree(skeleton) == "((()())())"
        assert complete_to_full(skeleton) == full

    def test_round_trip_all_binary(self):
        for n in range(1, 7):
            for t in enumerate_trees("binary", n):
                full = complete_to_full(t)
                assert full.n == 2 * t.n + 1 and full.is_full_binary
                assert strip_leaves(full) == t

    def test_round_trip_all_full(self):
        for n in range(3, 12, 2):
            for t in enumerate_trees("full_binary", n):
                assert complete_to_full(strip_leaves(t)) == t


class TestEnumeration:
    def test_rooted_counts(self):
        assert [sum(1 for _ in enumerate_trees("rooted", n)) for n in (1, 2, 3, 4)] == [
            1,
            1,
            2,
            4,
        ]

    def test_rooted_matches_brute_force(self):
        for n in range(1, 7):
            enumerated = {canonical_form(t) for t in enumerate_trees("rooted", n)}
            assert enumerated == brute_force_rooted_classes(n)
            assert sum(1 for _ in enumerate_trees("rooted", n)) == len(enumerated)

    def test_binary_counts_catalan(self):
        for n in range(1, 9):
            assert sum(1 for _ in enumerate_trees("binary", n)) == catalan_oracle(n)

    def test_full_binary_counts(self):
        assert sum(1 for _ in enumerate_trees("full_binary", 7)) == 5

    def test_binary_shapes_distinct(self):
        shapes = [t for t in enumerate_trees("binary", 3)]
        assert len({(s.parent, s.slot) for s in shapes}) == 5

    def test_errors(self):
        with pytest.raises(ValueError):
            list(enumerate_trees("full_binary", 4))
        with pytest.raises(ValueError):
            list(enumerate_trees("rooted", 0))
        with pytest.raises(ValueError):
            list(enumerate_trees("ternary", 3))


class TestCanonicalForm:
    def test_child_order_irrelevant(self):
        assert canonical_form(parse_tree("((())())")) == canonical_form(
            parse_tree("(()(()))")
        )

    def test_distinguishes_shapes(self):
        path5 = parse_tree("((((()))))")
        assert canonical_form(parse_tree(T_R)) != canonical_form(path5)

    def test_n5_classes(self):
        forms = {canonical_form(t) for t in enumerate_trees("rooted", 5)}
        assert len(forms) == 9
        assert forms == brute_force_rooted_classes(5)

    def test_parses_to_isomorphic_tree(self):
        for t in enumerate_trees("rooted", 6):
            key = canonical_form(t)
            assert canonical_form(parse_tree(key)) == key
