"""Shared builders and reference data for the test suite."""

from fractions import Fraction

from e8jacobi.ansatz import enumerate_monomials
from e8jacobi.grading import AB, BiDegree, Poly, ab
from e8jacobi.linsolve import echelonize, primitive_vector


def build(alphabet, terms):
    """Polynomial from [(coeff, {symbol: exponent}), ...]."""
    out = {}
    for coeff, exps in terms:
        vec = [0] * len(alphabet)
        for sym, e in exps.items():
            vec[alphabet.position(sym)] = e
        out[tuple(vec)] = Fraction(coeff)
    return Poly(alphabet, out)


def span_basis(forms, k, m):
    """Canonical echelon basis of the span of coefficient vectors."""
    mons = enumerate_monomials(forms[0].alphabet, BiDegree(k, m))
    pos = {mon: i for i, mon in enumerate(mons)}
    vecs = []
    for f in forms:
        v = [Fraction(0)] * len(mons)
        for mon, c in f.terms.items():
            v[pos[mon]] = c
        vecs.append(v)
    return [primitive_vector(r) for r in echelonize(vecs)]


def spans_equal(forms_a, forms_b, k, m):
    return span_basis(forms_a, k, m) == span_basis(forms_b, k, m)


# Known bases: weight -16 index 5 (two forms) and the unique
# weight -26 index 7 generator.

def m16_5_pair():
    phi1 = build(ab, [
        (1, {"E4": 2, "b5": 1}),
        (Fraction(18, 5), {"E4": 1, "a2": 1, "b3": 1}),
        (Fraction(-24, 5), {"E4": 1, "a3": 1, "b2": 1}),
        (12, {"E4": 1, "a4": 1, "b1": 1}),
    ])
    phi2 = build(ab, [
        (1, {"E6": 1, "a2": 1, "a3": 1}),
        (Fraction(36, 5), {"E4": 1, "a2": 1, "b3": 1}),
        (Fraction(-108, 5), {"E4": 1, "a3": 1, "b2": 1}),
        (72, {"E4": 1, "a4": 1, "b1": 1}),
        (-72, {"a2": 2, "b1": 1}),
    ])
    return [phi1, phi2]


def m26_7_generator():
    return build(ab, [
        (25, {"E6": 1, "a2": 1, "b5": 1}),
        (-10, {"E6": 1, "a3": 1, "b4": 1}),
        (900, {"E4": 1, "b1": 1, "b6": 1}),
        (-180, {"E4": 1, "b2": 1, "b5": 1}),
        (36, {"E4": 1, "b3": 1, "b4": 1}),
        (-1080, {"a2": 1, "b1": 1, "b4": 1}),
        (216, {"a2": 1, "b2": 1, "b3": 1}),
        (1080, {"a3": 1, "b1": 1, "b3": 1}),
        (-432, {"a3": 1, "b2": 2}),
    ])


# Generator-count Laurent polynomials P^w_m for m = 1..6,
# as {weight: count}.
PROFILES = {
    1: {4: 1},
    2: {-4: 1, -2: 1, 0: 1},
    3: {-8: 1, -6: 1, -4: 1, -2: 1, 0: 1},
    4: {-16: 1, -14: 1, -12: 1, -10: 1, -8: 2, -6: 1, -4: 1, -2: 1, 0: 1},
    5: {-16: 2, -14: 2, -12: 3, -10: 2, -8: 2, -6: 1, -4: 1, -2: 1, 0: 1},
    6: {-24: 2, -22: 2, -20: 3, -18: 3, -16: 3, -14: 3, -12: 3,
        -10: 2, -8: 2, -6: 1, -4: 1, -2: 1, 0: 1},
}

# dim J_{-4m, m} for m = 0..10 and the new-generator / relation counts
# of the lowest-weight subalgebra for m = 1..10.
LOWEST_WEIGHT_DIMS = [1, 0, 0, 0, 1, 0, 2, 0, 2, 1, 4]
LB_GENERATOR_COUNTS = [0, 0, 0, 1, 0, 2, 0, 1, 1, 2]
