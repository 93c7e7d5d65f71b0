"""
Two-dimensional CW complexes presented as a bouquet of circles with
2-cells glued along words in the circles.

Text format, one statement per line, ``#`` starts a comment::

    circles a b
    cell D = a b a^- b^-

``x^-`` is the inverse letter; an empty word glues a cell trivially.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property

from .exactlinalg import SparseExactMatrix, smith_normal_form

# (circle index in 1..k, exponent +1 or -1)
Letter = tuple[int, int]
AttachingWord = tuple[Letter, ...]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class PresentationError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class ComplexPresentation:
    circle_names: tuple[str, ...]
    cell_names: tuple[str, ...]
    words: tuple[AttachingWord, ...]

    def __post_init__(self):
        k = len(self.circle_names)
        if len(self.cell_names) != len(self.words):
            raise PresentationError("one word per cell required")
        names = self.circle_names + self.cell_names
        for name in names:
            if not _NAME.fullmatch(name):
                raise PresentationError(f"bad name {name!r}")
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise PresentationError(f"duplicate name {dup!r}")
        for j, word in enumerate(self.words):
            for i, eps in word:
                if not 1 <= i <= k:
                    raise PresentationError(f"cell {self.cell_names[j]}: circle index {i} out of range 1..{k}")
                if eps not in (1, -1):
                    raise PresentationError(f"cell {self.cell_names[j]}: exponent must be +1 or -1")

    @property
    def circle_count(self) -> int:
        return len(self.circle_names)

    @property
    def cell_count(self) -> int:
        return len(self.cell_names)

    @cached_property
    def boundary_vectors(self) -> tuple[tuple[int, ...], ...]:
        """Abelianised boundary of each 2-cell, as a length-k integer vector."""
        return tuple(abelianize(w, self.circle_count) for w in self.words)

    def render(self) -> str:
        lines = []
        if self.circle_names:
            lines.append("circles " + " ".join(self.circle_names))
        for name, word in zip(self.cell_names, self.words):
            letters = [self.circle_names[i - 1] + ("^-" if e < 0 else "") for i, e in word]
            lines.append(f"cell {name} =" + "".join(" " + x for x in letters))
        return "".join(line + "\n" for line in lines)

    def to_json(self) -> dict:
        return {
            "circles": list(self.circle_names),
            "cells": [{"name": n, "word": [[i, e] for i, e in w]}
                      for n, w in zip(self.cell_names, self.words)],
        }

    @classmethod
    def from_json(cls, data) -> "ComplexPresentation":
        if isinstance(data, str):
            data = json.loads(data)
        cells = data.get("cells", [])
        return cls(tuple(data.get("circles", [])),
                   tuple(c["name"] for c in cells),
                   tuple(tuple((int(i), int(e)) for i, e in c["word"]) for c in cells))


def parse_presentation(text: str) -> ComplexPresentation:
    circles: list[str] = []
    seen_circles = False
    cell_names: list[str] = []
    words: list[AttachingWord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        tokens = line.split()
        head = tokens[0]
        if head == "circles":
            if seen_circles:
                raise PresentationError("circles declared twice", lineno, col0)
            if cell_names:
                raise PresentationError("circles must be declared before cells", lineno, col0)
            seen_circles = True
            for tok in tokens[1:]:
                if not _NAME.fullmatch(tok):
                    raise PresentationError(f"bad circle name {tok!r}", lineno, line.index(tok) + 1)
                if tok in circles:
                    raise PresentationError(f"duplicate circle name {tok!r}", lineno, line.index(tok) + 1)
                circles.append(tok)
        elif head == "cell":
            m = re.match(r"\s*cell\s+([A-Za-z_][A-Za-z0-9_]*)\s*=(.*)$", line)
            if not m:
                raise PresentationError("expected 'cell <name> = <letters>'", lineno, col0)
            name = m.group(1)
            if name in cell_names or name in circles:
                raise PresentationError(f"duplicate cell name {name!r}", lineno, m.start(1) + 1)
            word = []
            for lm in re.finditer(r"\S+", m.group(2)):
                tok = lm.group()
                col = m.start(2) + lm.start() + 1
                base, inverse = (tok[:-2], True) if tok.endswith("^-") else (tok, False)
                if not _NAME.fullmatch(base):
                    raise PresentationError(f"bad letter {tok!r}", lineno, col)
                if base not in circles:
                    raise PresentationError(f"unknown circle {base!r}", lineno, col)
                word.append((circles.index(base) + 1, -1 if inverse else 1))
            cell_names.append(name)
            words.append(tuple(word))
        else:
            raise PresentationError(f"unknown statement {head!r}", lineno, col0)
    return ComplexPresentation(tuple(circles), tuple(cell_names), tuple(words))


def abelianize(word: AttachingWord, k: int) -> tuple[int, ...]:
    """Signed letter counts: the cellular boundary of the 2-cell in C_1."""
    out = [0] * k
    for i, e in word:
        out[i - 1] += e
    return tuple(out)


# ---------------------------------------------------------------------------
# Named complexes
# ---------------------------------------------------------------------------

def point() -> ComplexPresentation:
    return ComplexPresentation((), (), ())


def sphere() -> ComplexPresentation:
    return ComplexPresentation((), ("D",), ((),))


def sphere_two_cells() -> ComplexPresentation:
    return ComplexPresentation(("a",), ("D1", "D2"), (((1, 1),), ((1, -1),)))


def orientable_surface(g: int) -> ComplexPresentation:
    """Genus g: circles a_1..a_g, b_1..b_g (b_i is circle i+g), word [a_1,b_1]...[a_g,b_g]."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    names = tuple(f"a{i}" for i in range(1, g + 1)) + tuple(f"b{i}" for i in range(1, g + 1))
    word = []
    for i in range(1, g + 1):
        word += [(i, 1), (i + g, 1), (i, -1), (i + g, -1)]
    return ComplexPresentation(names, ("D",), (tuple(word),))


def nonorientable_surface(g: int) -> ComplexPresentation:
    """Connected sum of g projective planes: word a_1 a_1 a_2 a_2 ... a_g a_g."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    names = ("a",) if g == 1 else tuple(f"a{i}" for i in range(1, g + 1))
    word = tuple(x for i in range(1, g + 1) for x in ((i, 1), (i, 1)))
    return ComplexPresentation(names, ("D",), (word,))


def lens_attach(m: int) -> ComplexPresentation:
    """S^1 with a disc glued along a degree m map (word a^m)."""
    if m < 1:
        raise ValueError("degree must be >= 1")
    return ComplexPresentation(("a",), ("D",), (((1, 1),) * m,))


def bouquet(k: int) -> ComplexPresentation:
    if k < 1:
        raise ValueError("need at least one circle")
    return ComplexPresentation(tuple(f"a{i}" for i in range(1, k + 1)), (), ())


def moore(m: int) -> ComplexPresentation:
    """The Moore space M(Z/m, 1); same cells as lens_attach(m)."""
    return lens_attach(m)


_NAMED = {
    "point": (point, False),
    "sphere": (sphere, False),
    "sphere_two_cells": (sphere_two_cells, False),
    "sphere2": (sphere_two_cells, False),
    "torus": (lambda: orientable_surface(1), False),
    "rp2": (lambda: nonorientable_surface(1), False),
    "orientable_surface": (orientable_surface, True),
    "surface": (orientable_surface, True),
    "nonorientable_surface": (nonorientable_surface, True),
    "nonorientable": (nonorientable_surface, True),
    "lens_attach": (lens_attach, True),
    "lens": (lens_attach, True),
    "bouquet": (bouquet, True),
    "moore": (moore, True),
}


def named_complex(kind: str, param: int | None = None) -> ComplexPresentation:
    """
    Standard presentations by name. ``kind`` may carry its parameter after a
    colon, e.g. ``"surface:2"``, ``"nonorientable:3"``, ``"bouquet:4"``.
    """
    if ":" in kind:
        kind, _, arg = kind.partition(":")
        try:
            param = int(arg)
        except ValueError:
            raise ValueError(f"bad parameter {arg!r} for {kind}") from None
    try:
        factory, needs_param = _NAMED[kind]
    except KeyError:
        raise ValueError(f"unknown complex {kind!r}; known: {', '.join(sorted(_NAMED))}") from None
    if needs_param:
        if param is None:
            raise ValueError(f"{kind} needs a parameter, e.g. {kind}:2")
        return factory(param)
    if param is not None:
        raise ValueError(f"{kind} takes no parameter")
    return factory()


# ---------------------------------------------------------------------------
# Homology of X itself
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyShape:
    """H_1(X) = Z^a + Z/n_1 + ... + Z/n_r and H_2(X) = Z^b."""

    free_rank_deg1: int
    free_rank_deg2: int
    torsion_coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank_deg1 < 0 or self.free_rank_deg2 < 0:
            raise ValueError("ranks must be non-negative")
        if any(t < 2 for t in self.torsion_coefficients):
            raise ValueError("torsion coefficients must be >= 2")


def moore_decomposition(p: ComplexPresentation) -> HomologyShape:
    k, r = p.circle_count, p.cell_count
    entries = {(i, j): v for j, vec in enumerate(p.boundary_vectors) for i, v in enumerate(vec) if v}
    snf = smith_normal_form(SparseExactMatrix(k, r, entries))
    return HomologyShape(k - snf.rank, r - snf.rank, snf.torsion)
