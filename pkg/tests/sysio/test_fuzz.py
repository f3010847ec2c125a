#!/usr/bin/env python3

"""Seeded fuzzing of the document parser: every input parses or raises ParseError."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from nullcert.certgen import PolySystem
from nullcert.errors import ParseError
from nullcert.sysio import parse_system

CORPUS = Path(__file__).parent / "corpus"
ALPHABET = "xyzab0123456789+-*/^(),: \n#tPQX"
RUNS = 10_000


def _mutate(rng: random.Random, text: str) -> str:
    chars = list(text)
    for _ in range(rng.randint(1, 4)):
        op = rng.randrange(3)
        pos = rng.randrange(len(chars) + 1)
        if op == 0:
            chars.insert(pos, rng.choice(ALPHABET))
        elif chars:
            pos = min(pos, len(chars) - 1)
            if op == 1:
                del chars[pos]
            else:
                chars[pos] = rng.choice(ALPHABET)
    return "".join(chars)


def _garbage(rng: random.Random) -> bytes:
    return bytes(rng.randrange(256) for _ in range(rng.randint(0, 80)))


@pytest.mark.slow
def test_parser_never_crashes() -> None:
    rng = random.Random(0xC0FFEE)
    seeds = [p.read_text(encoding="utf-8") for p in sorted(CORPUS.glob("*.sys"))]
    parsed = rejected = 0
    for _ in range(RUNS):
        roll = rng.random()
        if roll < 0.8:
            data = _mutate(rng, rng.choice(seeds))
        elif roll < 0.9:
            data = _garbage(rng)
        else:
            data = "".join(rng.choice(ALPHABET) for _ in range(rng.randint(0, 60)))
        try:
            result = parse_system(data)
        except ParseError:
            rejected += 1
        else:
            assert isinstance(result, PolySystem)
            parsed += 1
    assert parsed + rejected == RUNS
    assert parsed > 0 and rejected > 0
