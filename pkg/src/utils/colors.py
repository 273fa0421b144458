#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Terminal Colors Module

Colored terminal output using ANSI escape codes, switched off when the
output is not a terminal, when NO_COLOR is set or when TERM is dumb.
"""

import os
import platform
import re
import sys
from typing import Any, Optional, TextIO


class Colors:
    """
    Color helpers for human-facing output.

    Verdicts (`passed`/`failed`) and diagnostics go through these methods;
    JSON reports never do.
    """

    RED = '\033[91m'
    GREEN = '\033[92m'
    YELLOW = '\033[93m'
    MAGENTA = '\033[95m'
    CYAN = '\033[96m'
    GRAY = '\033[90m'

    BOLD = '\033[1m'
    DIM = '\033[2m'

    RESET = '\033[0m'

    _enabled = True
    _initialized = False

    @classmethod
    def _initialize(cls):
        """
        Decide color support from the platform and environment.
        Called automatically on first use.
        """
        if cls._initialized:
            return

        cls._initialized = True

        if not sys.stdout.isatty():
            cls._enabled = False
            return

        if os.environ.get('NO_COLOR'):
            cls._enabled = False
            return

        if platform.system() == 'Windows':
            cls._initialize_windows()
        elif os.environ.get('TERM', '') == 'dumb':
            cls._enabled = False

    @classmethod
    def _initialize_windows(cls):
        """
        Enable ANSI escape sequences on Windows 10+, colorama otherwise.
        """
        try:
            import ctypes
            kernel32 = ctypes.windll.kernel32
            ENABLE_VIRTUAL_TERMINAL_PROCESSING = 0x0004
            for handle_id in (-11, -12):  # STD_OUTPUT_HANDLE, STD_ERROR_HANDLE
                handle = kernel32.GetStdHandle(handle_id)
                mode = ctypes.c_ulong()
                if kernel32.GetConsoleMode(handle, ctypes.byref(mode)):
                    kernel32.SetConsoleMode(handle, mode.value | ENABLE_VIRTUAL_TERMINAL_PROCESSING)
        except Exception:
            try:
                import colorama
                colorama.init()
            except ImportError:
                cls._enabled = False

    @classmethod
    def disable(cls):
        """Disable colored output."""
        cls._enabled = False
        cls._initialized = True

    @classmethod
    def enable(cls, force_recheck: bool = False):
        """Enable colored output."""
        cls._enabled = True
        if force_recheck:
            cls._initialized = False
        cls._initialize()

    @classmethod
    def is_enabled(cls) -> bool:
        if not cls._initialized:
            cls._initialize()
        return cls._enabled

    # ========== Convenience Methods ==========

    @classmethod
    def _colorize(cls, text: Any, *codes: str) -> str:
        """
        Apply color codes to text if colors are enabled.

        Args:
            text: Text to colorize
            *codes: Color/style codes to apply

        Returns:
            Colorized string or original text
        """
        if not cls._initialized:
            cls._initialize()

        text = str(text)

        if not cls._enabled or not codes:
            return text

        return ''.join(codes) + text + cls.RESET

    @classmethod
    def error(cls, text: Any) -> str:
        """Red, bold."""
        return cls._colorize(text, cls.RED, cls.BOLD)

    @classmethod
    def success(cls, text: Any) -> str:
        return cls._colorize(text, cls.GREEN)

    @classmethod
    def warning(cls, text: Any) -> str:
        return cls._colorize(text, cls.YELLOW)

    @classmethod
    def info(cls, text: Any) -> str:
        return cls._colorize(text, cls.CYAN)

    @classmethod
    def debug(cls, text: Any) -> str:
        return cls._colorize(text, cls.GRAY, cls.DIM)

    @classmethod
    def bold(cls, text: Any) -> str:
        return cls._colorize(text, cls.BOLD)

    @classmethod
    def passed(cls, text: Any = "PASS") -> str:
        """
        Format a successful verification verdict.

        Args:
            text: Verdict text

        Returns:
            Bold green text
        """
        return cls._colorize(text, cls.GREEN, cls.BOLD)

    @classmethod
    def failed(cls, text: Any = "FAIL") -> str:
        """
        Format a failed verification verdict.

        Args:
            text: Verdict text

        Returns:
            Bold magenta text
        """
        return cls._colorize(text, cls.MAGENTA, cls.BOLD)

    @classmethod
    def verdict(cls, ok: bool, yes: Any = "PASS", no: Any = "FAIL") -> str:
        return cls.passed(yes) if ok else cls.failed(no)

    @classmethod
    def strip_colors(cls, text: str) -> str:
        """
        Remove all ANSI color codes from text.

        Args:
            text: Text with potential color codes

        Returns:
            Plain text without color codes
        """
        return re.sub(r'\x1b\[[0-9;]*m', '', text)


class ProgressIndicator:
    """
    Progress bar on stderr for long property runs; silent unless stderr
    is a terminal so reports stay byte-identical.
    """

    def __init__(self, total: int, prefix: str = "Progress",
                 width: int = 40, stream: Optional[TextIO] = None):
        self.total = max(total, 1)
        self.prefix = prefix
        self.width = width
        self.current = 0
        self.stream = stream or sys.stderr
        self.active = hasattr(self.stream, 'isatty') and self.stream.isatty()

    def update(self, current: int, suffix: str = ""):
        self.current = current
        if not self.active:
            return
        percent = 100 * current / self.total
        filled = int(self.width * current // self.total)
        bar = '#' * filled + '-' * (self.width - filled)
        self.stream.write(f'\r{self.prefix}: |{bar}| {percent:.1f}% {suffix}')
        if current >= self.total:
            self.stream.write('\n')
        self.stream.flush()

    def increment(self, suffix: str = ""):
        """Increment progress by one."""
        self.update(self.current + 1, suffix)
