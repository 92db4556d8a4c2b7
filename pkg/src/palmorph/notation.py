"""Text notation for morphisms: ``a->babba;b->bab``.

Rules are separated by ``;`` or ``,``; the arrow may be ``->`` or ``↦``.
Letters are single alphanumeric characters and the alphabet is the set of
rule heads in order of appearance.
"""
from __future__ import annotations

import re

from .morphism import Morphism
from .words import Alphabet

_RULE = re.compile(r"\s*([0-9A-Za-z])\s*(?:->|↦)\s*([0-9A-Za-z]*)\s*")


class MorphismSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_morphism(text: str) -> Morphism:
    rules: dict[str, str] = {}
    starts: dict[str, int] = {}
    pos = 0
    for chunk in re.split(r"[;,]", text):
        if chunk.strip() or len(text.strip()) == 0:
            m = _RULE.fullmatch(chunk)
            if m is None:
                offset = len(chunk) - len(chunk.lstrip())
                raise MorphismSyntaxError(f"expected 'letter->image', got {chunk.strip()!r}",
                                          pos + offset)
            head, image = m.groups()
            if head in rules:
                raise MorphismSyntaxError(f"duplicate rule for {head!r}", pos + m.start(1))
            rules[head] = image
            starts[head] = pos + m.start(2)
        pos += len(chunk) + 1
    for head, image in rules.items():
        for i, c in enumerate(image):
            if c not in rules:
                raise MorphismSyntaxError(f"symbol {c!r} in the image of {head!r} has no rule",
                                          starts[head] + i)
    return Morphism(Alphabet(tuple(rules)), tuple(rules.values()))


def format_morphism(phi: Morphism, arrow: str = "->", sep: str = ";") -> str:
    return sep.join(f"{a}{arrow}{img}" for a, img in zip(phi.alphabet, phi.images))
