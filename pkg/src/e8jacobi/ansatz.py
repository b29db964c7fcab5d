"""Enumeration of all monomials of a given bidegree and ansatz building.

Enumeration is a bounded depth-first search over exponent vectors: the
exponent of any index-carrying generator is capped by the remaining
index, and the residual weight left for E4/E6 must be expressible as
4a + 6b with a, b >= 0.  This is equivalent to extracting one
coefficient of the obvious generating series, without having to pick a
series truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .grading import Alphabet, BiDegree, ParamPoly


@dataclass(frozen=True)
class AnsatzSpec:
    alphabet: Alphabet
    target: BiDegree
    symbol_prefix: str = "c"


def _weight_fillings(weight: int, has_e4: bool) -> List[tuple]:
    """All (a, b) with 4a + 6b == weight (a forced to 0 without E4)."""
    if weight < 0:
        return []
    out = []
    if has_e4:
        for b in range(weight // 6 + 1):
            rest = weight - 6 * b
            if rest % 4 == 0:
                out.append((rest // 4, b))
    else:
        if weight % 6 == 0:
            out.append((0, weight // 6))
    return out


def enumerate_monomials(alphabet: Alphabet, target: BiDegree) -> List[tuple]:
    """All exponent vectors of the exact bidegree, in canonical order.

    The list is finite because every generator has index >= 0 and the
    index-0 generators (E4, E6) have positive weight.
    """
    n = len(alphabet)
    symbols = alphabet.symbols
    degrees = alphabet.degrees
    has_e4 = "E4" in symbols
    e4_pos = symbols.index("E4") if has_e4 else None
    e6_pos = symbols.index("E6")
    indexed = [(i, degrees[i]) for i in range(n)
               if degrees[i].index > 0]

    results = []
    exps = [0] * n

    def descend(pos: int, index_left: int, weight_left: int):
        if pos == len(indexed):
            for a, b in _weight_fillings(weight_left, has_e4) \
                    if index_left == 0 else []:
                full = exps[:]
                if has_e4:
                    full[e4_pos] = a
                full[e6_pos] = b
                results.append(tuple(full))
            return
        i, deg = indexed[pos]
        max_e = index_left // deg.index
        for e in range(max_e + 1):
            exps[i] = e
            descend(pos + 1, index_left - e * deg.index,
                    weight_left - e * deg.weight)
        exps[i] = 0

    if target.index >= 0:
        descend(0, target.index, target.weight)
    results.sort(reverse=True)
    return results


def build_ansatz(spec: AnsatzSpec) -> ParamPoly:
    """One fresh unknown per monomial, numbered in monomial order."""
    mons = enumerate_monomials(spec.alphabet, spec.target)
    terms = {m: {unknown_name(spec.symbol_prefix, i): Fraction(1)}
             for i, m in enumerate(mons)}
    return ParamPoly(spec.alphabet, terms)


def unknown_name(prefix: str, position: int) -> str:
    """1-based unknown naming: prefix + position in monomial order."""
    return "%s%d" % (prefix, position + 1)
