"""Named input algebras: the shipped corpus of path and cycle quivers.

Path quivers are described by orientation words over ``><`` read from vertex
"1" toward higher labels; ``>`` points the arrow at the larger index.  Cycle
quivers take the two rotational arrow counts (p, q).
"""

from __future__ import annotations

import itertools
import os

from .errors import StructuralError
from .quivers import GentlePresentation, presentation


def type_a(word: str) -> GentlePresentation:
    """Path quiver on len(word) + 1 vertices named "1", "2", ...

    word[i] orients the arrow between vertices i+1 and i+2.
    """
    if any(ch not in "<>" for ch in word):
        raise StructuralError(f"orientation word {word!r} is not over ><")
    n = len(word) + 1
    vs = [str(i + 1) for i in range(n)]
    arrows = []
    for i, ch in enumerate(word):
        if ch == ">":
            arrows.append((f"a{i}", vs[i], vs[i + 1]))
        else:
            arrows.append((f"a{i}", vs[i + 1], vs[i]))
    return presentation(vs, arrows, [])


def type_a_tilde(p: int, q: int) -> GentlePresentation:
    """Acyclically oriented cycle on p + q vertices named "v0", "v1", ...

    The first p arrows run with the cycle, the remaining q against it;
    p, q >= 1 keeps the orientation acyclic.
    """
    if p < 1 or q < 1:
        raise StructuralError("need at least one arrow in each rotational sense")
    n = p + q
    vs = [f"v{i}" for i in range(n)]
    arrows = []
    for i in range(n):
        if i < p:
            arrows.append((f"a{i}", vs[i], vs[(i + 1) % n]))
        else:
            arrows.append((f"a{i}", vs[(i + 1) % n], vs[i]))
    return presentation(vs, arrows, [])


def orientation_words(n: int) -> list:
    """Every orientation word for a path quiver on n vertices, sorted."""
    if n < 1:
        raise StructuralError("a path quiver has at least one vertex")
    return ["".join(w) for w in itertools.product("<>", repeat=n - 1)]


def reflect_word(word: str) -> str:
    """The word of the same path quiver labelled from the other end."""
    swap = {"<": ">", ">": "<"}
    return "".join(swap[ch] for ch in reversed(word))


def orientation_classes(n: int) -> list:
    """One orientation word per reflection class, the lexicographic least."""
    return [w for w in orientation_words(n) if w <= reflect_word(w)]


def fixture_name_a(word: str) -> str:
    n = len(word) + 1
    if not word:
        return "A1"
    return f"A{n}_" + word.replace(">", "r").replace("<", "l")


# every orientation ships for small ranks; 6 and 7 get representatives only
# (linear, alternating, one mixed) and the rest are generated on demand
REPRESENTATIVE_WORDS = {
    6: (">>>>>", "><><>", ">><<>"),
    7: (">>>>>>", "><><><", ">>><<<"),
}

A_TILDE_SIZES = ((1, 1), (2, 1), (2, 2), (3, 1))


def corpus() -> dict:
    """Name -> presentation for every shipped fixture."""
    out = {}
    for n in range(1, 6):
        for w in orientation_words(n):
            out[fixture_name_a(w)] = type_a(w)
    for n in sorted(REPRESENTATIVE_WORDS):
        for w in REPRESENTATIVE_WORDS[n]:
            out[fixture_name_a(w)] = type_a(w)
    for p, q in A_TILDE_SIZES:
        out[f"Atilde_{p}_{q}"] = type_a_tilde(p, q)
    return out


def dump_corpus(dirpath: str) -> list:
    """Write every fixture as an algebra file under dirpath; returns paths."""
    from . import io_json

    os.makedirs(dirpath, exist_ok=True)
    paths = []
    for name, pres in sorted(corpus().items()):
        path = os.path.join(dirpath, f"{name}.json")
        io_json.write_json(path, io_json.algebra_to_obj(pres))
        paths.append(path)
    return paths
