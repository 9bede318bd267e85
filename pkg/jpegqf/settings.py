# coding: utf-8

"""
Container for global settings.
"""

from __future__ import annotations


__all__ = ["Settings"]


import os

from jpegqf.types import T


# update env variables
_on_gh = bool(os.getenv("GITHUB_ACTION"))
_on_rtd = bool(os.getenv("READTHEDOCS"))
if _on_gh or _on_rtd:
    os.environ["JPEGQF_COLORS"] = "False"

# unique placeholder for missing defaults, not taken from util to avoid a circular import
_no_default = object()


class Settings(object):

    __instance = None

    @classmethod
    def instance(cls) -> "Settings":
        if cls.__instance is None:
            cls.__instance = cls()
        return cls.__instance

    @classmethod
    def get_env(cls, name: str, default: T = _no_default) -> T | str:  # type: ignore[assignment]
        if name not in os.environ:
            if default is not _no_default:
                return default
            raise Exception(f"undefined environment variable '{name}'")
        return os.environ[name]

    @classmethod
    def flag_to_bool(cls, flag: bool | int | str) -> bool:
        if isinstance(flag, bool):
            return flag
        if isinstance(flag, int):
            return bool(flag)

        _flag = str(flag).lower()
        if _flag in ("false", "no", "0"):
            return False
        if _flag in ("true", "yes", "1"):
            return True

        raise ValueError(f"cannot interpret '{flag}' as bool")

    @classmethod
    def get_colors(cls) -> bool:
        return cls.flag_to_bool(cls.get_env("JPEGQF_COLORS", True))

    @classmethod
    def get_log_level(cls) -> str:
        return str(cls.get_env("JPEGQF_LOG_LEVEL", "WARNING")).upper()

    @classmethod
    def get_fixture_directory(cls) -> str:
        default = os.path.join(os.getcwd(), ".jpegqf_fixtures")
        path = cls.get_env("JPEGQF_FIXTURE_DIRECTORY", default)
        return os.path.expandvars(os.path.expanduser(str(path)))

    @classmethod
    def get_workers(cls) -> int:
        workers = cls.get_env("JPEGQF_WORKERS", 4)
        try:
            workers = int(workers)
        except ValueError:
            raise ValueError(f"cannot interpret '{workers}' as number of workers")
        if workers < 1:
            raise ValueError(f"number of workers must be positive, but got {workers}")
        return workers

    @classmethod
    def get_encoder_samples(cls) -> str | None:
        path = cls.get_env("JPEGQF_ENCODER_SAMPLES", None)
        return os.path.expandvars(os.path.expanduser(path)) if path else None

    def __init__(self):
        super().__init__()

        # get all settings
        self.colors: bool = self.get_colors()
        self.log_level: str = self.get_log_level()
        self.fixture_directory: str = self.get_fixture_directory()
        self.workers: int = self.get_workers()
        self.encoder_samples: str | None = self.get_encoder_samples()


# register convenience functions on module-level
inst = Settings.instance()
for attr, value in inst.__dict__.items():
    if attr.startswith("_"):
        continue
    locals()[attr] = value
