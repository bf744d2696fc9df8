from unittest import TestCase
import numpy as np
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup
from provar.classes.oracle.FiniteGroup import FiniteGroup
from provar.classes.variety.VarietySpec import VarietySpec
from provar.lib.exceptions import NotNormal, OrderCapExceeded


class TestFiniteGroup(TestCase):
    def setUp(self):
        self.s3 = FiniteGroup.fromPermutationGroup(SymmetricGroup(3), "S3")
        self.a4 = FiniteGroup.fromPermutationGroup(AlternatingGroup(4), "A4")

    def test___init__(self):
        with self.assertRaises(ValueError):
            FiniteGroup(np.array([[0, 0], [0, 0]]))
        with self.assertRaises(ValueError):
            FiniteGroup(np.array([[0, 1, 2]]))
        with self.assertRaises(OrderCapExceeded):
            FiniteGroup(np.zeros((65, 65), dtype=np.int64))
        with self.assertRaises(ValueError):
            FiniteGroup.semidirect(4, 2, 2)

    def test_constructors(self):
        z12 = FiniteGroup.cyclic(12)
        self.assertEqual(z12.order, 12)
        self.assertTrue(z12.isAbelian())
        self.assertEqual(z12.exponent(), 12)
        q8 = FiniteGroup.quaternion()
        self.assertEqual(sorted(q8.elementOrders()), [1, 2, 4, 4, 4, 4, 4, 4])
        self.assertEqual(len(q8.center()), 2)
        d4 = FiniteGroup.dihedral(4)
        self.assertEqual(d4.order, 8)
        self.assertFalse(d4.isAbelian())
        self.assertEqual(d4.fingerprint()[0], 8)
        self.assertNotEqual(d4.fingerprint(), q8.fingerprint())
        self.assertEqual(FiniteGroup.dihedral(3).fingerprint(), self.s3.fingerprint())
        self.assertEqual(FiniteGroup.directProduct(FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)).fingerprint(),
                         FiniteGroup.cyclic(6).fingerprint())
        with self.assertRaises(OrderCapExceeded):
            FiniteGroup.directProduct(FiniteGroup.cyclic(8), FiniteGroup.cyclic(9))

    def test_generate(self):
        z12 = FiniteGroup.cyclic(12)
        self.assertEqual(z12.generate([8]), frozenset([0, 4, 8]))
        self.assertEqual(len(z12.generate([4, 6])), 6)
        self.assertEqual(z12.generate([]), z12.trivial())

    def test_subgroups(self):
        self.assertEqual(len(self.s3.subgroups()), 6)
        self.assertEqual(len(self.s3.normalSubgroups()), 3)
        self.assertEqual(len(self.a4.subgroups()), 10)
        self.assertEqual([len(s) for s in self.a4.normalSubgroups()], [1, 4, 12])
        self.assertEqual(len(self.s3.commutatorSubgroup()), 3)
        self.assertEqual(self.s3.center(), self.s3.trivial())

    def test_quotient(self):
        a3 = self.s3.commutatorSubgroup()
        quotient = self.s3.quotient(a3)
        self.assertEqual(quotient.order, 2)
        self.assertTrue(quotient.isAbelian())
        with self.assertRaises(NotNormal):
            self.s3.quotient([s for s in self.s3.subgroups() if len(s) == 2][0])

    def test_cores(self):
        self.assertEqual(len(self.s3.pCore(3)), 3)
        self.assertEqual(len(self.s3.pCore(2)), 1)
        self.assertEqual(len(self.s3.pPrimeCore(2)), 3)
        self.assertEqual(len(self.s3.pPrimeCore(3)), 1)
        self.assertEqual(len(self.a4.pPrimeCore(3)), 4)

    def test_isSupersolvable(self):
        for group in (self.s3, FiniteGroup.cyclic(12), FiniteGroup.dihedral(4), FiniteGroup.quaternion(),
                      FiniteGroup.semidirect(7, 3, 2)):
            self.assertTrue(group.isSupersolvable(), group.name)
        self.assertFalse(self.a4.isSupersolvable())
        self.assertFalse(FiniteGroup.fromPermutationGroup(SymmetricGroup(4), "S4").isSupersolvable())

    def test_isNilpotent(self):
        self.assertTrue(FiniteGroup.dihedral(4).isNilpotent())
        self.assertTrue(FiniteGroup.directProduct(FiniteGroup.quaternion(), FiniteGroup.cyclic(3)).isNilpotent())
        self.assertFalse(self.s3.isNilpotent())

    def test_inHp(self):
        self.assertTrue(self.s3.inHp(3))
        self.assertFalse(self.s3.inHp(2))
        metacyclic = FiniteGroup.semidirect(7, 3, 2)
        self.assertTrue(metacyclic.inHp(7))
        self.assertFalse(metacyclic.inHp(3))
        self.assertFalse(FiniteGroup.cyclic(4).inHp(3))

    def test_inVariety(self):
        z6 = FiniteGroup.cyclic(6)
        self.assertTrue(z6.inVariety(VarietySpec("ab", 6)))
        self.assertFalse(z6.inVariety(VarietySpec("ab", 3)))
        self.assertTrue(FiniteGroup.cyclic(4).inVariety(VarietySpec("gp", 2)))
        self.assertFalse(z6.inVariety(VarietySpec("gp", 2)))
        self.assertTrue(self.s3.inVariety(VarietySpec("su")))
        self.assertFalse(self.s3.inVariety(VarietySpec("nil")))
        self.assertTrue(self.s3.inVariety(VarietySpec("hp", 3)))
