# coding: utf-8


__all__ = ["SettingsTest"]


import os
import unittest
from unittest import mock

from jpegqf.settings import Settings


class SettingsTest(unittest.TestCase):

    def test_instance(self):
        self.assertIs(Settings.instance(), Settings.instance())

    def test_flag_to_bool(self):
        self.assertTrue(Settings.flag_to_bool(True))
        self.assertTrue(Settings.flag_to_bool(1))
        self.assertTrue(Settings.flag_to_bool("yes"))
        self.assertTrue(Settings.flag_to_bool("True"))
        self.assertFalse(Settings.flag_to_bool("0"))
        self.assertFalse(Settings.flag_to_bool("false"))
        with self.assertRaises(ValueError):
            Settings.flag_to_bool("maybe")

    def test_get_env(self):
        with mock.patch.dict(os.environ, {"JPEGQF_TEST_VAR": "foo"}):
            self.assertEqual(Settings.get_env("JPEGQF_TEST_VAR"), "foo")
        self.assertEqual(Settings.get_env("JPEGQF_TEST_VAR", "bar"), "bar")
        with self.assertRaises(Exception):
            Settings.get_env("JPEGQF_TEST_VAR")

    def test_colors(self):
        with mock.patch.dict(os.environ, {"JPEGQF_COLORS": "False"}):
            self.assertFalse(Settings.get_colors())

    def test_log_level(self):
        with mock.patch.dict(os.environ, {"JPEGQF_LOG_LEVEL": "debug"}):
            self.assertEqual(Settings.get_log_level(), "DEBUG")

    def test_fixture_directory(self):
        with mock.patch.dict(os.environ, {"JPEGQF_FIXTURE_DIRECTORY": "/tmp/jpegqf_fixtures"}):
            self.assertEqual(Settings.get_fixture_directory(), "/tmp/jpegqf_fixtures")

    def test_workers(self):
        with mock.patch.dict(os.environ, {"JPEGQF_WORKERS": "8"}):
            self.assertEqual(Settings.get_workers(), 8)
        with mock.patch.dict(os.environ, {"JPEGQF_WORKERS": "many"}):
            with self.assertRaises(ValueError):
                Settings.get_workers()
        with mock.patch.dict(os.environ, {"JPEGQF_WORKERS": "0"}):
            with self.assertRaises(ValueError):
                Settings.get_workers()

    def test_encoder_samples(self):
        env = {k: v for k, v in os.environ.items() if k != "JPEGQF_ENCODER_SAMPLES"}
        with mock.patch.dict(os.environ, env, clear=True):
            self.assertIsNone(Settings.get_encoder_samples())
        with mock.patch.dict(os.environ, {"JPEGQF_ENCODER_SAMPLES": "/data/samples"}):
            self.assertEqual(Settings.get_encoder_samples(), "/data/samples")
