"""Engine configuration: circle handling mode and strand-count guard rails.

Two modes.  In "quotient" mode (the default), any composition result that
carries an essential circle is dropped: this is the category where the
projector calculus lives.  In "raw" mode those terms are kept on the
diagram as a circle count.  Inessential circles always turn into factors
of -2 regardless of mode.

Environment variables ATL_MODE and ATL_MAX_STRANDS seed the defaults;
explicit set_config / configure calls (and CLI flags) override them.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

MODE_QUOTIENT = "quotient"
MODE_RAW = "raw"
_MODES = (MODE_QUOTIENT, MODE_RAW)


@dataclass
class EngineConfig:
    max_strands: int = 24
    mode: str = MODE_QUOTIENT

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {_MODES}")
        if self.max_strands < 0:
            raise ValueError("max_strands must be nonnegative")


def _from_env() -> EngineConfig:
    kwargs = {}
    if "ATL_MAX_STRANDS" in os.environ:
        kwargs["max_strands"] = int(os.environ["ATL_MAX_STRANDS"])
    if "ATL_MODE" in os.environ:
        kwargs["mode"] = os.environ["ATL_MODE"]
    return EngineConfig(**kwargs)


_config = _from_env()


def get_config() -> EngineConfig:
    return _config


def set_config(cfg: EngineConfig) -> None:
    global _config
    _config = cfg


@contextmanager
def configure(**kwargs):
    """Temporarily override config fields.

    >>> with configure(mode="raw"):
    ...     get_config().mode
    'raw'
    """
    global _config
    old = _config
    _config = replace(old, **kwargs)
    try:
        yield _config
    finally:
        _config = old
