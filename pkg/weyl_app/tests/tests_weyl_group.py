import itertools

from django.test import SimpleTestCase

from config.exceptions import ConfigurationError, ResourceLimitError, UsageError
from weyl_app.services import (
    all_reduced_words,
    braid_check_words,
    build_root_system,
    bruhat_leq,
    enumerate_weyl,
    extreme_reduced_words,
    group_order,
    identity,
    inverse,
    length_additive_factorizations,
    longest_element,
    minimal_coset_reps,
    multiply,
    parabolic_subgroup,
    parse_element,
    positive_root_count,
    reduced_word,
    reflection,
    simple_reflection,
    to_json,
    word_to_element,
)

SMALL_TYPES = [('A', 1), ('A', 2), ('A', 3), ('B', 2), ('B', 3), ('C', 2), ('C', 3), ('D', 2), ('D', 3)]


def _pairing(a, b):
    return sum(x * y for x, y in zip(a, b))


class RootSystemTest(SimpleTestCase):
    """ Тесты корневых систем """

    def test_small_cases(self):
        a1 = build_root_system('A', 1)
        self.assertEqual(a1.simple_roots, ((1, -1),))
        self.assertEqual(a1.positive_roots, ((1, -1),))
        a2 = build_root_system('A', 2)
        self.assertEqual(set(a2.positive_roots), {(1, -1, 0), (0, 1, -1), (1, 0, -1)})
        self.assertEqual(len(build_root_system('B', 2).positive_roots), 4)

    def test_standard_simple_roots(self):
        self.assertEqual(build_root_system('B', 3).simple_roots[-1], (0, 0, 1))
        self.assertEqual(build_root_system('C', 3).simple_roots[-1], (0, 0, 2))
        self.assertEqual(build_root_system('D', 4).simple_roots[-1], (0, 0, 1, 1))

    def test_root_counts(self):
        for family, rank in SMALL_TYPES + [('A', 5), ('D', 4)]:
            rs = build_root_system(family, rank)
            self.assertEqual(len(rs.positive_roots), positive_root_count(family, rank))
            for root in rs.simple_roots:
                self.assertIn(root, rs.positive_roots)

    def test_simple_reflection_permutes_other_roots(self):
        for family, rank in SMALL_TYPES:
            rs = build_root_system(family, rank)
            for i in rs.indices:
                s = simple_reflection(rs, i)
                alpha = rs.simple_roots[i - 1]
                self.assertEqual(s.apply(alpha), tuple(-c for c in alpha))
                others = set(rs.positive_roots) - {alpha}
                self.assertEqual({s.apply(root) for root in others}, others)

    def test_unsupported_types(self):
        for family, rank in [('E', 6), ('A', 0), ('D', 1), ('B', -2)]:
            with self.assertRaises(ConfigurationError):
                build_root_system(family, rank)


class WeylGroupTest(SimpleTestCase):
    """ Тесты группы Вейля: длина, слова, порядок Брюа """

    def setUp(self):
        self.a2 = build_root_system('A', 2)
        self.s1 = simple_reflection(self.a2, 1)
        self.s2 = simple_reflection(self.a2, 2)

    def test_group_operations(self):
        self.assertTrue(multiply(self.s1, self.s1).is_identity)
        self.assertEqual(multiply(self.s1, self.s1).length, 0)
        self.assertEqual(word_to_element(self.a2, [1, 2, 1]).length, 3)
        self.assertEqual(longest_element(self.a2), word_to_element(self.a2, [1, 2, 1]))
        self.assertEqual(longest_element(build_root_system('B', 2)).length, 4)

    def test_mixed_root_systems(self):
        with self.assertRaises(UsageError):
            multiply(self.s1, simple_reflection(build_root_system('B', 2), 1))

    def test_enumeration_orders(self):
        for family, rank, order in [('A', 1, 2), ('A', 3, 24), ('B', 3, 48), ('C', 3, 48), ('D', 4, 192)]:
            elements = enumerate_weyl(build_root_system(family, rank))
            self.assertEqual(len(elements), order)
            self.assertEqual(len(set(elements)), order)
            self.assertEqual(group_order(family, rank), order)

    def test_enumeration_is_ordered(self):
        elements = enumerate_weyl(build_root_system('B', 2))
        keys = [w.sort_key for w in elements]
        self.assertEqual(keys, sorted(keys))
        self.assertTrue(elements[0].is_identity)

    def test_enumeration_bound(self):
        with self.assertRaises(ResourceLimitError) as error:
            enumerate_weyl(build_root_system('A', 3), bound=10)
        self.assertEqual(error.exception.required, 24)

    def test_length_counts_inverted_roots(self):
        for family, rank in SMALL_TYPES:
            rs = build_root_system(family, rank)
            for w in enumerate_weyl(rs):
                self.assertEqual(len(reduced_word(w)), w.length)
                self.assertEqual(word_to_element(rs, reduced_word(w)), w)
                self.assertEqual(inverse(inverse(w)), w)
                self.assertEqual(inverse(w).length, w.length)
                self.assertTrue(multiply(w, inverse(w)).is_identity)

    def test_braid_relations(self):
        for family, rank in SMALL_TYPES:
            rs = build_root_system(family, rank)
            for i, j in itertools.combinations(rs.indices, 2):
                a, b = rs.simple_roots[i - 1], rs.simple_roots[j - 1]
                product = 4 * _pairing(a, b) ** 2 // (_pairing(a, a) * _pairing(b, b))
                order = {0: 2, 1: 3, 2: 4, 3: 6}[product]
                st = multiply(simple_reflection(rs, i), simple_reflection(rs, j))
                power = identity(rs)
                for step in range(1, order + 1):
                    power = multiply(power, st)
                    self.assertEqual(power.is_identity, step == order)

    def test_reduced_words(self):
        self.assertEqual(reduced_word(identity(self.a2)), ())
        self.assertEqual(all_reduced_words(longest_element(self.a2)), {(1, 2, 1), (2, 1, 2)})
        a3 = build_root_system('A', 3)
        words = all_reduced_words(longest_element(a3))
        self.assertEqual(len(words), 16)
        for word in words:
            self.assertEqual(word_to_element(a3, word), longest_element(a3))

    def test_reduced_words_cap(self):
        with self.assertRaises(ResourceLimitError):
            all_reduced_words(longest_element(build_root_system('A', 3)), cap=5)

    def test_extreme_reduced_words(self):
        for family, rank in [('A', 3), ('B', 3)]:
            w0 = longest_element(build_root_system(family, rank))
            words = all_reduced_words(w0)
            self.assertEqual(extreme_reduced_words(w0), (min(words), max(words)))
        self.assertEqual(extreme_reduced_words(identity(self.a2)), ((), ()))

    def test_braid_check_words(self):
        a3 = build_root_system('A', 3)
        w0 = longest_element(a3)
        self.assertEqual(len(braid_check_words(w0)), 16)
        capped = braid_check_words(w0, cap=5)
        self.assertEqual(capped, frozenset(extreme_reduced_words(w0)))
        self.assertEqual(len(capped), 2)
        for word in capped:
            self.assertEqual(word_to_element(a3, word), w0)

    def test_bruhat_examples(self):
        for w in enumerate_weyl(self.a2):
            self.assertTrue(bruhat_leq(identity(self.a2), w))
        self.assertFalse(bruhat_leq(self.s1, self.s2))
        self.assertTrue(bruhat_leq(self.s1, multiply(self.s1, self.s2)))

    def test_bruhat_subword_property(self):
        for family, rank in [('A', 2), ('A', 3), ('B', 2)]:
            rs = build_root_system(family, rank)
            elements = enumerate_weyl(rs)
            for w in elements:
                word = reduced_word(w)
                below = set()
                for mask in itertools.product((0, 1), repeat=len(word)):
                    below.add(word_to_element(rs, [i for i, keep in zip(word, mask) if keep]))
                for u in elements:
                    self.assertEqual(bruhat_leq(u, w), u in below)

    def test_factorizations(self):
        e = identity(self.a2)
        self.assertEqual(length_additive_factorizations(e), [(e, e)])
        self.assertEqual(length_additive_factorizations(self.s1), [(e, self.s1), (self.s1, e)])
        self.assertEqual(len(length_additive_factorizations(longest_element(self.a2))), 6)

    def test_factorizations_brute_force(self):
        for family, rank in [('A', 3), ('B', 2), ('C', 3)]:
            rs = build_root_system(family, rank)
            elements = enumerate_weyl(rs)
            for w in elements:
                expected = {
                    (u, v) for u in elements for v in elements
                    if multiply(u, v) == w and u.length + v.length == w.length
                }
                self.assertEqual(set(length_additive_factorizations(w)), expected)
            self.assertEqual(len(length_additive_factorizations(longest_element(rs))), len(elements))

    def test_minimal_coset_reps(self):
        self.assertEqual(minimal_coset_reps(self.a2, []), enumerate_weyl(self.a2))
        self.assertEqual(len(minimal_coset_reps(self.a2, {1})), 3)
        a3 = build_root_system('A', 3)
        self.assertEqual(len(minimal_coset_reps(a3, {1, 2})), 4)
        for family, rank in SMALL_TYPES:
            rs = build_root_system(family, rank)
            theta = {1}
            total = len(minimal_coset_reps(rs, theta)) * len(parabolic_subgroup(rs, theta))
            self.assertEqual(total, len(enumerate_weyl(rs)))

    def test_reflections(self):
        self.assertEqual(reflection(self.a2, (1, 0, -1)), longest_element(self.a2))
        b2 = build_root_system('B', 2)
        for root in b2.positive_roots:
            s = reflection(b2, root)
            self.assertTrue(multiply(s, s).is_identity)
            self.assertEqual(s.apply(root), tuple(-c for c in root))

    def test_parse_element(self):
        self.assertTrue(parse_element(self.a2, '').is_identity)
        self.assertEqual(parse_element(self.a2, '[2,3,1]'), parse_element(self.a2, '1,2'))
        self.assertEqual(parse_element(self.a2, '1'), self.s1)
        for text in ('a', '1,,2', '[1,1,2]', '3'):
            with self.assertRaises(UsageError):
                parse_element(self.a2, text)
        with self.assertRaises(UsageError):
            parse_element(build_root_system('B', 2), '[1,2]')

    def test_json_form(self):
        self.assertEqual(to_json(identity(self.a2)), [])
        self.assertEqual(to_json(longest_element(self.a2)), [1, 2, 1])
