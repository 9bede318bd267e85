# coding: utf-8

"""
Custom base model shared by all value types.
"""

from __future__ import annotations

__all__ = ["BaseModel"]

from pydantic import BaseModel as PDBaseModel, ConfigDict

from jpegqf.util import maybe_colored


class BaseModel(PDBaseModel):
    """
    Base model for all jpegqf value types. Instances are immutable and validate their defaults, so
    they can be shared freely between threads and cached.
    """

    model_config = ConfigDict(frozen=True, validate_default=True)

    def __repr_name__(self) -> str:
        return maybe_colored(super().__repr_name__(), color="light_green")
