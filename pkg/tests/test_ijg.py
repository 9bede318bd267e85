# coding: utf-8


__all__ = ["IjgTest"]


import unittest

from jpegqf.models.matrix import Channel, QuantMatrix
from jpegqf.ijg import (
    base_tables, base_matrix, quality_scaling, synthesize_matrix, synthesize_pair,
    standard_matrices, find_collisions,
)

from .util import LUMINANCE_TABLE, CHROMINANCE_TABLE, oracle_scale, oracle_matrix


class IjgTest(unittest.TestCase):

    def test_base_tables(self):
        tables = base_tables()
        self.assertEqual(list(tables.luminance.flat), LUMINANCE_TABLE)
        self.assertEqual(list(tables.chrominance.flat), CHROMINANCE_TABLE)
        self.assertEqual(tables.get(Channel.luminance), tables.luminance)
        self.assertEqual(tables.get(Channel.chrominance), tables.chrominance)
        self.assertEqual(base_matrix(Channel.luminance)[7][5], 100)
        self.assertIs(base_tables(), tables)

    def test_quality_scaling(self):
        self.assertEqual(quality_scaling(100), 0)
        self.assertEqual(quality_scaling(75), 50)
        self.assertEqual(quality_scaling(50), 100)
        self.assertEqual(quality_scaling(49), 102)
        self.assertEqual(quality_scaling(25), 200)
        self.assertEqual(quality_scaling(3), 1666)
        self.assertEqual(quality_scaling(1), 5000)

        for f in range(1, 101):
            self.assertEqual(quality_scaling(f), oracle_scale(f))

        for f in (0, 101, -5, 75.0, True, "75"):
            with self.assertRaises(ValueError):
                quality_scaling(f)

    def test_synthesize_75(self):
        lum = synthesize_matrix(75, Channel.luminance)
        self.assertEqual(lum.steps[0], (8, 6, 5, 8, 12, 20, 26, 31))
        self.assertEqual(lum.steps[1], (6, 6, 7, 10, 13, 29, 30, 28))
        self.assertEqual(lum.step(8, 8), 50)

        chrom = synthesize_matrix(75, Channel.chrominance)
        self.assertEqual(chrom.step(1, 1), 9)
        self.assertEqual(chrom.steps[0], (9, 9, 12, 24, 50, 50, 50, 50))
        self.assertEqual(chrom.steps[7], (50,) * 8)

    def test_synthesize_98(self):
        lum = synthesize_matrix(98, Channel.luminance)
        self.assertEqual(lum.steps[0], (1, 1, 1, 1, 1, 2, 2, 2))
        self.assertEqual(lum.steps[2], (1, 1, 1, 1, 2, 2, 3, 2))

        chrom = synthesize_matrix(98, Channel.chrominance)
        self.assertEqual(chrom.steps[0], (1, 1, 1, 2, 4, 4, 4, 4))

    def test_synthesize_extremes(self):
        self.assertEqual(synthesize_matrix(100, Channel.luminance), QuantMatrix.constant(1))
        self.assertEqual(synthesize_matrix(100, Channel.chrominance), QuantMatrix.constant(1))
        self.assertEqual(synthesize_matrix(1, Channel.luminance), QuantMatrix.constant(255))
        self.assertEqual(synthesize_matrix(50, Channel.luminance), base_tables().luminance)

    def test_synthesize_oracle(self):
        for f in range(1, 101):
            pair = synthesize_pair(f)
            self.assertEqual(list(pair.luminance.flat), oracle_matrix(f, LUMINANCE_TABLE))
            self.assertEqual(list(pair.chrominance.flat), oracle_matrix(f, CHROMINANCE_TABLE))

    def test_synthesize_range(self):
        for pair in standard_matrices().values():
            for channel in Channel:
                flat = pair.require(channel).flat
                self.assertGreaterEqual(min(flat), 1)
                self.assertLessEqual(max(flat), 255)

    def test_monotonicity(self):
        for channel in Channel:
            for f in range(1, 100):
                lower = synthesize_matrix(f, channel).flat
                upper = synthesize_matrix(f + 1, channel).flat
                self.assertTrue(all(a >= b for a, b in zip(lower, upper)))

    def test_synthesize_invalid(self):
        with self.assertRaises(ValueError):
            synthesize_pair(0)
        with self.assertRaises(ValueError):
            synthesize_matrix(101, Channel.luminance)

    def test_standard_matrices(self):
        matrices = standard_matrices()
        self.assertEqual(sorted(matrices), list(range(1, 101)))
        self.assertIs(standard_matrices(), matrices)

    def test_find_collisions(self):
        self.assertEqual(find_collisions(Channel.luminance), [])
        self.assertEqual(find_collisions(Channel.chrominance), [(1, 2, 3)])
        self.assertEqual(synthesize_matrix(3, Channel.chrominance), QuantMatrix.constant(255))
