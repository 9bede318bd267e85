# coding: utf-8


__all__ = ["FixtureSpecTest", "CorpusTest"]


import os
import tempfile
import unittest

import yaml
from pydantic import ValidationError

from jpegqf.models.matrix import Channel, QuantMatrix
from jpegqf.ijg import synthesize_pair
from jpegqf.identify import identify_bytes
from jpegqf.cli import CliRequest, run
from jpegqf.jpeg import Precision, extract_dqt_tables, extract_tables, scan_segments
from jpegqf.corpus import (
    FixtureSpec, FixtureTable, Perturbation, write_minimal_jpeg, standard_corpus, perturb,
    random_perturbations, write_fixtures, load_manifest,
)


class FixtureSpecTest(unittest.TestCase):

    def test_standard(self):
        spec = FixtureSpec.standard(75)
        self.assertEqual(spec.quality, 75)
        self.assertEqual([t.table_id for t in spec.tables], [0, 1])
        self.assertEqual(spec.table_pair(), synthesize_pair(75))
        self.assertEqual(spec.name, "q075")

    def test_validation(self):
        with self.assertRaises(ValidationError):
            FixtureSpec(tables=[])
        with self.assertRaises(ValidationError):
            FixtureTable(table_id=0, matrix=QuantMatrix.constant(256))
        with self.assertRaises(ValidationError):
            FixtureTable(table_id=4, matrix=QuantMatrix.constant(1))

        # perturbation of a missing table
        lum_only = FixtureSpec(tables=[FixtureTable(table_id=0, matrix=QuantMatrix.constant(2))])
        with self.assertRaises(ValidationError):
            FixtureSpec(
                tables=lum_only.tables,
                perturbations=[Perturbation(channel=Channel.chrominance, i=1, j=1, value=3)],
            )

        # 8-bit range of perturbed values
        with self.assertRaises(ValidationError):
            FixtureSpec(
                tables=lum_only.tables,
                perturbations=[Perturbation(channel=Channel.luminance, i=1, j=1, value=256)],
            )
        with self.assertRaises(ValidationError):
            Perturbation(channel=Channel.luminance, i=9, j=1, value=3)

    def test_name(self):
        spec = perturb(FixtureSpec.standard(75), Channel.luminance, 8, 8, -1)
        self.assertEqual(spec.name, "q075_lum88v49")

        custom = FixtureSpec(tables=[FixtureTable(table_id=0, matrix=QuantMatrix.constant(2))])
        self.assertTrue(custom.name.startswith("custom_"))


class CorpusTest(unittest.TestCase):

    def test_write_minimal_jpeg(self):
        spec = FixtureSpec.standard(85)
        data = write_minimal_jpeg(spec)

        self.assertEqual(data[:4], b"\xff\xd8\xff\xdb")
        self.assertEqual(data[-2:], b"\xff\xd9")
        self.assertEqual(data, write_minimal_jpeg(FixtureSpec.standard(85)))
        self.assertEqual(
            [s.name for s in scan_segments(data)],
            ["DQT", "DQT", "SOF0", "SOS"],
        )
        self.assertEqual(extract_tables(data), synthesize_pair(85))

        with self.assertRaises(ValueError):
            write_minimal_jpeg(synthesize_pair(85))

    def test_write_sixteen_bit(self):
        spec = FixtureSpec(tables=[FixtureTable(
            table_id=0,
            matrix=QuantMatrix.constant(1000),
            precision=Precision.sixteen_bit,
        )])
        data = write_minimal_jpeg(spec)

        tables = extract_dqt_tables(data)
        self.assertEqual(len(tables), 1)
        self.assertIs(tables[0].precision, Precision.sixteen_bit)
        self.assertEqual(tables[0].matrix, QuantMatrix.constant(1000))
        self.assertIn("SOF1", [s.name for s in scan_segments(data)])

    def test_standard_corpus(self):
        corpus = standard_corpus(range(50, 101))
        self.assertEqual([f for f, _ in corpus], list(range(50, 101)))
        for f, data in corpus:
            self.assertEqual(identify_bytes(data).status, f)

        self.assertEqual(standard_corpus([]), [])
        self.assertEqual(len(standard_corpus(range(1, 101))), 100)
        for f in (0, 101, 7.5):
            with self.assertRaises(ValueError):
                standard_corpus([50, f])

    def test_perturb(self):
        spec = FixtureSpec.standard(75)
        perturbed = perturb(spec, Channel.luminance, 8, 8, -1)

        self.assertEqual(perturbed.table_pair().luminance.step(8, 8), 49)
        self.assertEqual(spec.table_pair().luminance.step(8, 8), 50)
        self.assertEqual(perturbed.table_pair().chrominance, spec.table_pair().chrominance)
        self.assertEqual(extract_tables(write_minimal_jpeg(perturbed)), perturbed.table_pair())

        # twice on the same position
        twice = perturb(perturbed, Channel.luminance, 8, 8, -1)
        self.assertEqual(twice.table_pair().luminance.step(8, 8), 48)

        self.assertEqual(perturb(spec, Channel.chrominance, 2, 3, 0), spec)

        with self.assertRaises(ValueError):
            perturb(FixtureSpec.standard(100), Channel.luminance, 1, 1, -1)
        with self.assertRaises(ValueError):
            perturb(FixtureSpec.standard(1), Channel.luminance, 1, 1, 1)

    def test_random_perturbations(self):
        specs = random_perturbations(50, seed=3)
        self.assertEqual(len(specs), 50)
        self.assertEqual(specs, random_perturbations(50, seed=3))

        for spec in specs:
            self.assertEqual(len(spec.perturbations), 1)
            p = spec.perturbations[0]
            standard = FixtureSpec.standard(spec.quality).table_pair().require(p.channel)
            self.assertEqual(abs(p.value - standard.step(p.i, p.j)), 1)

        specs = random_perturbations(20, qualities=[100], channels=[Channel.chrominance])
        self.assertTrue(all(s.perturbations[0].value == 2 for s in specs))

    def test_write_fixtures(self):
        specs = [
            FixtureSpec.standard(90),
            perturb(FixtureSpec.standard(75), Channel.luminance, 8, 8, 1),
        ]
        with tempfile.TemporaryDirectory() as tmp:
            paths = write_fixtures(specs, tmp)
            names = [os.path.basename(p) for p in paths]
            self.assertEqual(names, ["q090.jpg", "q075_lum88v51.jpg"])
            self.assertTrue(all(os.path.exists(p) for p in paths))

            with open(os.path.join(tmp, "manifest.yaml"), "r") as f:
                content = yaml.safe_load(f)
            self.assertEqual([e["status"] for e in content["fixtures"]], [90, 102])

            loaded = load_manifest(tmp)
            self.assertEqual([path for path, _, _ in loaded], paths)
            self.assertEqual([spec for _, spec, _ in loaded], specs)
            self.assertEqual([status for _, _, status in loaded], [90, 102])

            for path, _, status in loaded:
                with open(path, "rb") as f:
                    self.assertEqual(identify_bytes(f.read()).status, status)

    def test_write_fixtures_without_channel_tables(self):
        # only ids 2 and 3, which identification never uses
        spec = FixtureSpec(tables=[
            FixtureTable(table_id=2, matrix=QuantMatrix.constant(5)),
            FixtureTable(table_id=3, matrix=QuantMatrix.constant(6)),
        ])
        self.assertEqual(spec.expected_status(), 200)
        self.assertEqual(FixtureSpec.standard(75).expected_status(), 75)
        chroma_only = FixtureSpec(tables=[FixtureSpec.standard(60).tables[1]])
        self.assertEqual(chroma_only.expected_status(), 60)

        with tempfile.TemporaryDirectory() as tmp:
            paths = write_fixtures([FixtureSpec.standard(80), spec], tmp)
            self.assertTrue(all(os.path.exists(p) for p in paths))
            self.assertEqual([status for _, _, status in load_manifest(tmp)], [80, 200])

            status, _ = run(CliRequest(path=paths[1], verbosity=0))
            self.assertEqual(status, 200)

    def test_load_manifest_missing(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(FileNotFoundError):
                load_manifest(tmp)
