#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
motivic-ts - Main Entry Point
"""

import os
import sys
from typing import List, Optional, Sequence

# Add src to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.argparser import parse_arguments, validate_arguments
from src.cli.commands import run
from src.utils.colors import Colors
from src.utils.config_loader import prepare_config
from src.utils.debug import dprint, dump_config, enable_debug


class _TeeStream:
    """Write to the original stream and, without colors, to a log file."""

    def __init__(self, original, fh):
        self._orig = original
        self._fh = fh
        self.encoding = getattr(original, 'encoding', 'utf-8')

    def write(self, s):
        self._orig.write(s)
        self._fh.write(Colors.strip_colors(s))

    def flush(self):
        try:
            self._orig.flush()
        finally:
            self._fh.flush()

    def isatty(self):
        return getattr(self._orig, 'isatty', lambda: False)()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    args = parse_arguments(argv)

    handles: List = []
    saved = (sys.stdout, sys.stderr)

    # Helper to mirror stdout/stderr to a log file
    def _setup_logging(path: str) -> bool:
        try:
            log_path = os.path.expanduser(path)
            os.makedirs(os.path.dirname(log_path) or '.', exist_ok=True)
            log_fh = open(log_path, 'a', encoding='utf-8')
        except OSError as e:
            print(Colors.warning(f"Could not open log file '{path}': {e}"), file=sys.stderr)
            return False
        handles.append(log_fh)
        sys.stdout = _TeeStream(sys.stdout, log_fh)
        sys.stderr = _TeeStream(sys.stderr, log_fh)
        print(Colors.info(f"Logging enabled. Mirroring output to: {log_path}"), file=sys.stderr)
        return True

    try:
        # CLI-provided log file takes precedence and is set up immediately
        if args.log_file:
            _setup_logging(args.log_file)

        if args.debug or args.debug_tags:
            enable_debug(True, args.debug_tags)
            dprint(f"Debug mode enabled; command={args.command}", tag="INIT")

        if not validate_arguments(args):
            return 1

        config = prepare_config(args)
        if not config:
            print(Colors.error("Configuration failed"), file=sys.stderr)
            return 1
        dump_config(config)

        # If logging was not set up via CLI, honor config value
        if not handles and config.get('log_file'):
            _setup_logging(config['log_file'])

        return run(args, config)

    except KeyboardInterrupt:
        print(Colors.warning("\nInterrupted by user"), file=sys.stderr)
        return 1
    finally:
        sys.stdout.flush()
        sys.stdout, sys.stderr = saved
        for fh in handles:
            fh.close()


if __name__ == "__main__":
    sys.exit(main())
