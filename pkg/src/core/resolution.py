#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Resolution Strata Module

Motivic Milnor fibre of a germ from the combinatorics of an embedded
resolution: sum over strata I of (1-L)^(|I|-1) times the class of the
unramified cover of E_I restricted to the fibre over the point.

Strata file format:

    # comments start with '#'
    dimension = 1

    [entry]
    components = [E1, E3]
    multiplicities = {E1: 2, E3: 6}
    m = 2
    class = Mu(2)

Classes must already be restricted to the preimage of the point.
"""

import re
from dataclasses import dataclass
from math import gcd
from functools import reduce
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .classexpr import ClassParser, format_class
from .errors import DuplicateIdSet, GcdMismatch, ParseError
from .gring import LPoly, MotClass, localize, lpoly_class, zero
from ..utils.debug import dprint

_IDENT = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class StratumEntry:
    id_set: Tuple[str, ...]
    multiplicities: Tuple[Tuple[str, int], ...]
    m: int
    stratum_class: MotClass


@dataclass(frozen=True)
class StrataData:
    entries: Tuple[StratumEntry, ...]
    dimension: int = 1


def make_entry(ids, multiplicities: Dict[str, int], m: int, cls: MotClass,
               line: int = 0) -> StratumEntry:
    """
    Validated stratum entry.

    Raises:
        ParseError: on missing multiplicities or an action order not dividing m
        GcdMismatch: if m is not the gcd of the multiplicities
    """
    ids = tuple(sorted(ids))
    if not ids:
        raise ParseError("a stratum needs at least one component", line)
    if set(multiplicities) != set(ids):
        raise ParseError(f"multiplicities {sorted(multiplicities)} do not match components {list(ids)}", line)
    if any(n < 1 for n in multiplicities.values()):
        raise ParseError("multiplicities must be positive", line)
    expected = reduce(gcd, (multiplicities[i] for i in ids))
    if m != expected:
        raise GcdMismatch(f"m = {m} but gcd of multiplicities is {expected}", line)
    if m % cls.action_order():
        raise ParseError(f"class action order {cls.action_order()} does not divide m = {m}", line)
    return StratumEntry(ids, tuple(sorted(multiplicities.items())), m, cls)


def make_strata(entries: List[StratumEntry], dimension: int = 1) -> StrataData:
    seen = set()
    for entry in entries:
        if entry.id_set in seen:
            raise DuplicateIdSet(f"component set {list(entry.id_set)} appears twice")
        seen.add(entry.id_set)
    return StrataData(tuple(entries), dimension)


def _parse_list(value: str, line: int) -> List[str]:
    value = value.strip()
    if not (value.startswith("[") and value.endswith("]")):
        raise ParseError(f"expected [ids], got {value!r}", line)
    ids = [v.strip() for v in value[1:-1].split(",") if v.strip()]
    for i in ids:
        if not _IDENT.match(i):
            raise ParseError(f"bad component id {i!r}", line)
    if len(set(ids)) != len(ids):
        raise ParseError("repeated component id", line)
    return ids


def _parse_map(value: str, line: int) -> Dict[str, int]:
    value = value.strip()
    if not (value.startswith("{") and value.endswith("}")):
        raise ParseError(f"expected {{id: N}}, got {value!r}", line)
    out: Dict[str, int] = {}
    for item in filter(None, (v.strip() for v in value[1:-1].split(","))):
        key, sep, number = item.partition(":")
        key = key.strip()
        if not sep or not _IDENT.match(key):
            raise ParseError(f"bad multiplicity entry {item!r}", line)
        try:
            out[key] = int(number)
        except ValueError:
            raise ParseError(f"bad multiplicity {number.strip()!r}", line)
    return out


_ENTRY_KEYS = ("components", "multiplicities", "m", "class")


def parse_strata(text: str) -> StrataData:
    """
    Parse and validate a strata file.

    Raises:
        ParseError: malformed input
        GcdMismatch: m differs from the gcd of the multiplicities
        DuplicateIdSet: two entries share a component set
    """
    parser = ClassParser()
    dimension: Optional[int] = None
    entries: List[StratumEntry] = []
    current: Optional[Dict[str, Tuple[str, int]]] = None
    start = 0

    def close() -> None:
        if current is None:
            return
        missing = [k for k in _ENTRY_KEYS if k not in current]
        if missing:
            raise ParseError(f"entry is missing {', '.join(missing)}", start)
        ids = _parse_list(*current["components"])
        mults = _parse_map(*current["multiplicities"])
        m_text, m_line = current["m"]
        try:
            m = int(m_text)
        except ValueError:
            raise ParseError(f"bad m {m_text!r}", m_line)
        cls_text, cls_line = current["class"]
        try:
            cls = parser.parse(cls_text)
        except ParseError as e:
            raise ParseError(str(e), cls_line)
        entries.append(make_entry(ids, mults, m, cls, start))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "[entry]":
            close()
            current, start = {}, lineno
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        if current is None:
            if key != "dimension":
                raise ParseError(f"unexpected key {key!r} before the first [entry]", lineno)
            try:
                dimension = int(value)
            except ValueError:
                raise ParseError(f"bad dimension {value.strip()!r}", lineno)
            continue
        if key not in _ENTRY_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in current:
            raise ParseError(f"duplicate key {key!r}", lineno)
        current[key] = (value.strip(), lineno)
    close()
    if dimension is None:
        raise ParseError("missing 'dimension'")
    if not entries:
        raise ParseError("no strata entries")
    data = make_strata(entries, dimension)
    dprint(f"parsed {len(data.entries)} strata (dimension {dimension})", tag="STRATA")
    return data


def load_strata(path: Union[str, Path]) -> StrataData:
    return parse_strata(Path(path).read_text(encoding="utf-8"))


def format_strata(data: StrataData) -> str:
    """Text form accepted by parse_strata."""
    lines = [f"dimension = {data.dimension}"]
    for entry in data.entries:
        mults = ", ".join(f"{i}: {n}" for i, n in entry.multiplicities)
        lines += [
            "",
            "[entry]",
            f"components = [{', '.join(entry.id_set)}]",
            f"multiplicities = {{{mults}}}",
            f"m = {entry.m}",
            f"class = {format_class(entry.stratum_class)}",
        ]
    return "\n".join(lines) + "\n"


def milnor_from_strata(data: StrataData) -> MotClass:
    """sum over entries of (1-L)^(|I|-1) * [class]."""
    one_minus_l = LPoly.from_dict({0: 1, 1: -1})
    total = zero()
    for entry in data.entries:
        factor = LPoly.const(1)
        for _ in range(len(entry.id_set) - 1):
            factor = factor * one_minus_l
        total = total + lpoly_class(factor) * entry.stratum_class
    return total


def localized_milnor(data: StrataData) -> MotClass:
    return localize(milnor_from_strata(data))
