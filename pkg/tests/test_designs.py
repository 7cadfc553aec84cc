#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Design Tests
Tests for cyclic difference matrices and circulant layers
"""

import itertools
import tempfile
import unittest
from pathlib import Path

import numpy as np

from core.errors import FormatError, InvalidDesignError
from core.gf2 import BinMatrix, mul_transpose, vstack
from designs.cdm import Cdm, cdm_build, cdm_verify, dumps_cdm, load_cdm, loads_cdm, save_cdm
from designs.layers import (
    circulant,
    expand,
    layer_of_row,
    reflect_layer,
    shear_permutation,
    stack_layers,
)

CDM_P7 = [
    [0, 1, 2, 3, 4, 5, 6],
    [0, 2, 4, 6, 1, 3, 5],
    [0, 3, 6, 2, 5, 1, 4],
    [0, 4, 1, 5, 2, 6, 3],
    [0, 5, 3, 1, 6, 4, 2],
    [0, 6, 5, 4, 3, 2, 1],
]

CIRCULANT_2_7 = [
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
]


class TestCirculant(unittest.TestCase):
    """Test circulant permutation matrices"""

    def test_zero_shift_is_identity(self):
        for p in (3, 5, 7):
            self.assertEqual(circulant(0, p), BinMatrix.identity(p))

    def test_shift_two_of_seven(self):
        np.testing.assert_array_equal(circulant(2, 7).dense, CIRCULANT_2_7)

    def test_inverse_shift(self):
        """Test I(x) I(p-x) = I and I(x) I(x)ᵀ = I"""
        for p in (5, 7):
            for x in range(1, p):
                a = circulant(x, p)
                product = (a.dense.astype(int) @ circulant(p - x, p).dense.astype(int)) % 2
                np.testing.assert_array_equal(product, np.eye(p, dtype=int))
                self.assertEqual(mul_transpose(a, a), BinMatrix.identity(p))

    def test_out_of_range(self):
        with self.assertRaises(InvalidDesignError):
            circulant(7, 7)
        with self.assertRaises(InvalidDesignError):
            circulant(-1, 7)


class TestCdm(unittest.TestCase):
    """Test CDM construction and verification"""

    def test_p7_display(self):
        cdm = cdm_build(7)
        self.assertEqual((cdm.mu, cdm.v), (6, 7))
        np.testing.assert_array_equal(cdm.as_array(), CDM_P7)
        self.assertEqual(cdm.labels, (1, 2, 3, 4, 5, 6))

    def test_askew_prepends_zero_row(self):
        cdm = cdm_build(5, askew=True)
        self.assertEqual(cdm.mu, 5)
        self.assertEqual(cdm.entries[0], (0, 0, 0, 0, 0))
        self.assertEqual(cdm.labels[0], 0)

    def test_built_matrices_verify(self):
        for p, askew in itertools.product((5, 7, 11, 13, 29), (False, True)):
            with self.subTest(p=p, askew=askew):
                self.assertTrue(cdm_verify(cdm_build(p, askew)))

    def test_askew_allows_three(self):
        self.assertTrue(cdm_verify(cdm_build(3, askew=True)))
        with self.assertRaises(InvalidDesignError):
            cdm_build(3)

    def test_rejects_non_primes(self):
        for bad in (1, 2, 9, 15):
            with self.assertRaises(InvalidDesignError):
                cdm_build(bad)

    def test_identical_rows_fail(self):
        self.assertFalse(cdm_verify(Cdm(7, (CDM_P7[1], CDM_P7[1]))))

    def test_perturbed_entry_fails(self):
        rows = [list(row) for row in CDM_P7]
        rows[2][3] = (rows[2][3] + 1) % 7
        self.assertFalse(cdm_verify(Cdm(7, tuple(tuple(r) for r in rows))))

    def test_malformed_shape(self):
        with self.assertRaises(InvalidDesignError):
            Cdm(7, ((0, 1, 2),))
        with self.assertRaises(InvalidDesignError):
            Cdm(5, ((0, 1, 2, 3, 5),))

    def test_text_codec(self):
        cdm = cdm_build(7, askew=True)
        parsed = loads_cdm(dumps_cdm(cdm))
        self.assertEqual(parsed.entries, cdm.entries)
        self.assertEqual(parsed.labels, cdm.labels)
        self.assertTrue(parsed.askew)
        with tempfile.TemporaryDirectory() as tmp:
            path = save_cdm(Path(tmp) / "cdm.txt", cdm)
            self.assertEqual(load_cdm(path), cdm)

    def test_text_codec_rejects_bad_input(self):
        with self.assertRaises(FormatError):
            loads_cdm("")
        with self.assertRaises(FormatError):
            loads_cdm("7 2 0\n0 1 2 3 4 5 6\n")
        with self.assertRaises(FormatError):
            loads_cdm("7 x 0\n")


class TestExpand(unittest.TestCase):
    """Test layer expansion"""

    def test_p7_stack_shape(self):
        layers = expand(cdm_build(7))
        self.assertEqual(len(layers), 6)
        self.assertEqual(stack_layers(layers, 7).shape, (42, 49))
        self.assertEqual([layer.label for layer in layers], [1, 2, 3, 4, 5, 6])

    def test_weights(self):
        for layer in expand(cdm_build(11, askew=True)):
            self.assertTrue((layer.matrix.row_weights() == 11).all())
            self.assertTrue((layer.matrix.col_weights() == 1).all())

    def test_zero_row_layer(self):
        zero_layer = expand(cdm_build(5, askew=True))[0]
        expected = BinMatrix.from_dense(np.tile(np.eye(5, dtype=np.uint8), (1, 5)))
        self.assertEqual(zero_layer.matrix, expected)

    def test_block_structure(self):
        """Test that block j of the layer for row r is I(r_j)"""
        cdm = cdm_build(7)
        for layer, row in zip(expand(cdm), cdm.entries):
            for j, x in enumerate(row):
                block = layer.matrix.dense[:, 7 * j:7 * (j + 1)]
                np.testing.assert_array_equal(block, circulant(x, 7).dense)

    def test_pairwise_overlaps_p5(self):
        """Test one shared column across layers and none within a layer"""
        layers = expand(cdm_build(5, askew=True))
        for a, b in itertools.combinations_with_replacement(range(len(layers)), 2):
            overlaps = layers[a].matrix.dense.astype(int) @ layers[b].matrix.dense.T.astype(int)
            if a == b:
                np.testing.assert_array_equal(overlaps, 5 * np.eye(5, dtype=int))
            else:
                np.testing.assert_array_equal(overlaps, np.ones((5, 5), dtype=int))

    def test_unverified_cdm_rejected(self):
        with self.assertRaises(InvalidDesignError):
            expand(Cdm(7, (CDM_P7[1], CDM_P7[1])))

    def test_layer_of_row_matches_expansion(self):
        for layer in expand(cdm_build(7)):
            self.assertEqual(layer_of_row(layer.label, 7).matrix, layer.matrix)


class TestWitnesses(unittest.TestCase):
    """Test the isomorphism witnesses between layers"""

    def test_reflection(self):
        """Test that the layer of r_(p-a) reflects onto the layer of r_a"""
        for p in (5, 7, 11):
            for a in range(1, p):
                reflected = reflect_layer(layer_of_row(p - a, p))
                self.assertEqual(reflected.label, a)
                self.assertEqual(reflected.matrix, layer_of_row(a, p).matrix)

    def test_shear(self):
        """Test that the shear by t carries r_a onto r_(a+t) with rows in place"""
        for p in (5, 7):
            for a in range(p):
                for t in range(p):
                    moved = layer_of_row(a, p).matrix.permute_columns(shear_permutation(p, t))
                    self.assertEqual(moved, layer_of_row((a + t) % p, p).matrix)

    def test_reflection_is_not_identity(self):
        layers = [layer_of_row(a, 7).matrix for a in (1, 2, 3)]
        others = [layer_of_row(a, 7).matrix for a in (6, 5, 4)]
        self.assertNotEqual(vstack(*layers), vstack(*others))


if __name__ == '__main__':
    unittest.main()
