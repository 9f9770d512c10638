from random import Random

from django.test import SimpleTestCase, tag

from config.exceptions import ConventionError, InvalidGKMClassError, ResourceLimitError
from gkm_app.services import (
    DEFAULT_CONVENTION,
    GKMClass,
    GKMConvention,
    candidate_conventions,
    constant_class,
    demazure_gkm,
    gkm_table,
    is_gkm_compatible,
    point_class,
    restriction_witnesses,
    schubert_gkm,
    search_convention,
    verify_antipode_gkm,
    verify_characterization,
    verify_coproduct_gkm,
    verify_type_a_agreement,
)
from poly_app.services import LinearForm, Poly, parse, random_homogeneous
from weyl_app.services import build_root_system, enumerate_weyl, longest_element, parse_element


class GKMClassTest(SimpleTestCase):
    """ Тесты классов в модели локализации """

    def test_constant_class(self):
        for family, rank in [('A', 2), ('B', 2)]:
            rs = build_root_system(family, rank)
            one = constant_class(rs)
            self.assertTrue(is_gkm_compatible(one))
            for i in rs.indices:
                self.assertTrue(demazure_gkm(i, one).is_zero)

    def test_rank_one_point_class(self):
        a1 = build_root_system('A', 1)
        e, s1 = enumerate_weyl(a1)
        point = point_class(a1)
        self.assertEqual(point(s1), parse('t2 - t1', 2))
        self.assertTrue(point(e).is_zero)
        image = demazure_gkm(1, point)
        self.assertEqual(image(e), Poly.one(2))
        self.assertEqual(image(s1), Poly.one(2))

    def test_b2_point_class(self):
        b2 = build_root_system('B', 2)
        w0 = longest_element(b2)
        xi = schubert_gkm(w0)
        self.assertEqual(xi.support(), [w0])
        expected = Poly.one(2)
        for root in b2.positive_roots:
            expected = expected * -LinearForm.from_vector('t', root).to_poly(2)
        self.assertEqual(xi(w0), expected)
        self.assertEqual(xi(w0).degree, 4)

    def test_square_is_zero(self):
        rng = Random(37)
        for family, rank in [('A', 2), ('B', 2), ('C', 2)]:
            rs = build_root_system(family, rank)
            table = gkm_table(rs)
            for _ in range(5):
                combination = constant_class(rs, 0)
                for w in rng.sample(enumerate_weyl(rs), 3):
                    coefficient = random_homogeneous(rng, rs.ambient_dim, ('t',), 1)
                    combination = GKMClass(
                        rs, {u: combination(u) + coefficient * table[w](u) for u in enumerate_weyl(rs)}
                    )
                for i in rs.indices:
                    once = demazure_gkm(i, combination)
                    self.assertTrue(is_gkm_compatible(once))
                    self.assertTrue(demazure_gkm(i, once).is_zero)

    def test_invalid_class(self):
        a1 = build_root_system('A', 1)
        e, s1 = enumerate_weyl(a1)
        broken = GKMClass(a1, {e: Poly.one(2), s1: Poly.zero(2)})
        self.assertFalse(is_gkm_compatible(broken))
        with self.assertRaises(InvalidGKMClassError):
            demazure_gkm(1, broken)

    def test_json(self):
        a1 = build_root_system('A', 1)
        self.assertEqual(schubert_gkm(enumerate_weyl(a1)[1]).to_json(), [[[], '0'], [[1], '-t1 + t2']])


class GKMConventionTest(SimpleTestCase):
    """ Тесты поиска соглашения о знаках """

    def test_search(self):
        convention, verdicts = search_convention()
        self.assertEqual(convention, DEFAULT_CONVENTION)
        self.assertEqual(len(verdicts), len(candidate_conventions()))
        passing = [verdict for verdict in verdicts if verdict['characterization']]
        self.assertIn({'epsilon': -1, 'sigma': 1, 'placement': 'w0', 'characterization': True, 'type_a': False},
                      passing)

    def test_round_trip(self):
        self.assertEqual(GKMConvention.from_json(DEFAULT_CONVENTION.to_json()), DEFAULT_CONVENTION)


class GKMVerificationTest(SimpleTestCase):
    """ Тесты тождеств в модели локализации """

    def test_identity_class(self):
        for family, rank in [('A', 2), ('B', 2), ('D', 3)]:
            rs = build_root_system(family, rank)
            xi = schubert_gkm(enumerate_weyl(rs)[0])
            for u in enumerate_weyl(rs):
                self.assertEqual(xi(u), Poly.one(rs.ambient_dim))

    def test_type_a_agreement(self):
        for rank in (1, 2, 3):
            for w in enumerate_weyl(build_root_system('A', rank)):
                self.assertTrue(verify_type_a_agreement(w).passed)

    def test_characterization(self):
        for family, rank in [('A', 3), ('B', 2), ('C', 3), ('D', 3)]:
            for w in enumerate_weyl(build_root_system(family, rank)):
                report = verify_characterization(w)
                self.assertTrue(report.passed, report.witnesses)

    def test_rank_one_examples(self):
        a1 = build_root_system('A', 1)
        s1 = parse_element(a1, '1')
        report = verify_coproduct_gkm(s1)
        self.assertTrue(report.passed)
        self.assertEqual(report.substitutions, 4)
        self.assertEqual(schubert_gkm(s1)(s1), parse('t2 - t1', 2))
        self.assertTrue(verify_antipode_gkm(s1).passed)

    def test_coproduct(self):
        for family, rank in [('A', 2), ('B', 2), ('C', 2)]:
            for w in enumerate_weyl(build_root_system(family, rank)):
                self.assertTrue(verify_coproduct_gkm(w).passed)

    def test_antipode(self):
        for family, rank in [('B', 2), ('C', 3), ('D', 3)]:
            for w in enumerate_weyl(build_root_system(family, rank)):
                self.assertTrue(verify_antipode_gkm(w).passed)

    def test_coproduct_cap(self):
        w0 = longest_element(build_root_system('D', 4))
        with self.assertRaises(ResourceLimitError) as error:
            verify_coproduct_gkm(w0)
        self.assertEqual(error.exception.required, 192)

    def test_misplaced_point_class_is_rejected(self):
        for family in ('B', 'C'):
            rs = build_root_system(family, 2)
            with self.assertRaises(ConventionError):
                schubert_gkm(parse_element(rs, '1'), GKMConvention(1, -1, 'e'))
            with self.assertRaises(ConventionError):
                verify_characterization(enumerate_weyl(rs)[0], GKMConvention(1, -1, 'e'))

    def test_every_rejected_candidate_raises(self):
        _, verdicts = search_convention()
        for verdict in verdicts:
            convention = GKMConvention.from_json(verdict)
            if convention == DEFAULT_CONVENTION or verdict['characterization']:
                continue
            with self.assertRaises(ConventionError):
                for family, rank in [('A', 1), ('A', 2), ('B', 2), ('C', 2)]:
                    gkm_table(build_root_system(family, rank), convention)

    def test_restriction_witnesses(self):
        b2 = build_root_system('B', 2)
        s1 = parse_element(b2, '1')
        self.assertEqual(restriction_witnesses(s1, schubert_gkm(s1)), [])
        misplaced = GKMClass(b2, {enumerate_weyl(b2)[0]: parse('t1', 2)})
        self.assertEqual(restriction_witnesses(s1, misplaced), [['support', []], ['support', [1]]])


@tag('slow')
class GKMRankThreeTest(SimpleTestCase):
    """
    Тесты тождеств на группах порядка 48 и 192, несколько минут.
    Запускаются отдельно: python manage.py test --tag slow
    """

    def test_coproduct_rank_three(self):
        for family in ('B', 'C'):
            for w in enumerate_weyl(build_root_system(family, 3)):
                report = verify_coproduct_gkm(w)
                self.assertTrue(report.passed, report.witnesses)
                self.assertEqual(report.substitutions, 48 * 48)

    def test_antipode_d4(self):
        elements = enumerate_weyl(build_root_system('D', 4))
        self.assertEqual(len(elements), 192)
        for w in elements:
            report = verify_antipode_gkm(w)
            self.assertTrue(report.passed, report.witnesses)
