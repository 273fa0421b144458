#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Debug utilities

Opt-in tracing for enumerations, realizations and suites. Nothing is
printed unless --debug is given; lines go to stderr so that reports on
stdout stay reproducible.
"""

from __future__ import annotations

import datetime as _dt
import sys
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterable, Iterator, Optional

from .colors import Colors

_DEBUG_ENABLED = False
_TAGS: Optional[frozenset] = None


def enable_debug(enabled: bool = True, tags: Optional[Iterable[str]] = None) -> None:
    """
    Switch tracing on or off. With `tags`, only lines carrying one of
    those tags (e.g. ARCS, RING) are printed.
    """
    global _DEBUG_ENABLED, _TAGS
    _DEBUG_ENABLED = bool(enabled)
    _TAGS = frozenset(t.upper() for t in tags) if tags else None


def is_enabled(tag: Optional[str] = None) -> bool:
    if not _DEBUG_ENABLED:
        return False
    return _TAGS is None or tag is None or tag.upper() in _TAGS


def dprint(msg: Any, *, tag: str | None = None) -> None:
    """Print one `[HH:MM:SS] [DEBUG][TAG] msg` line to stderr if enabled."""
    if not is_enabled(tag):
        return
    ts = _dt.datetime.now().strftime('%H:%M:%S')
    prefix = f"[{ts}] [DEBUG]"
    if tag:
        prefix += f"[{tag}]"
    print(Colors.debug(f"{prefix} {msg}"), file=sys.stderr)


@contextmanager
def timed(label: str, *, tag: str | None = None) -> Iterator[None]:
    """Trace the wall time of a block, e.g. one full arc enumeration."""
    if not is_enabled(tag):
        yield
        return
    start = time.perf_counter()
    try:
        yield
    finally:
        dprint(f"{label} took {time.perf_counter() - start:.3f}s", tag=tag)


def dump_config(config: Dict[str, Any]) -> None:
    """Trace the effective configuration, one key per line, sorted."""
    if not is_enabled("CFG"):
        return
    dprint("Effective configuration:", tag="CFG")
    for key in sorted(config):
        dprint(f"{key}: {config[key]}", tag="CFG")
