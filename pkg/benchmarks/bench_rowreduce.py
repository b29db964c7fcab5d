"""Benchmark the compiled row-reduction kernel against the pure-Python twin.

Workloads: dense random big-integer matrices of growing size, plus the
real coefficient system arising from the weight -24 index 6 construction.
Both backends are imported directly, so the E8JACOBI_PURE_PYTHON switch
is irrelevant here.

Run:  python3 benchmarks/bench_rowreduce.py
"""

import random
import time

from e8jacobi import _rowreduce_py
from e8jacobi.ansatz import AnsatzSpec, build_ansatz, unknown_name
from e8jacobi.generators import ParamFrac, e4_split, p16_5, sub_ab_to_AB
from e8jacobi.grading import AB, BiDegree, ParamPoly, S_ALPHABET, ab
from e8jacobi.ansatz import enumerate_monomials
from e8jacobi.construct import _sl_prefix
from e8jacobi.linsolve import LinearSystem, _integer_rows, coefficient_equations

try:
    from e8jacobi import _rowreduce_c
except ImportError:
    _rowreduce_c = None


def synthetic_case(nrows, ncols, bits, seed):
    rng = random.Random(seed)
    return [[rng.getrandbits(bits) - (1 << (bits - 1))
             if rng.random() < 0.4 else 0
             for _ in range(ncols)]
            for _ in range(nrows)]


def construction_case(k, m):
    """The integer rows of the real linear system at (weight, index)."""
    mons = enumerate_monomials(ab, BiDegree(k, m))
    ansatz = build_ansatz(AnsatzSpec(ab, BiDegree(k, m), "c"))
    pf = sub_ab_to_AB(ansatz)
    n, p = pf.delta_pow, pf.e4_pow
    qs, _ = e4_split(ParamFrac(pf.num, p, 0))
    names = [unknown_name("c", i) for i in range(len(mons))]
    rows = []
    p165 = p16_5()
    for l in range(1, p + 1):
        target = BiDegree(k + 12 * n - 12 * l, m - 5 * l)
        s_mons = enumerate_monomials(S_ALPHABET, target) \
            if target.index >= 0 else []
        q_l = qs[l - 1] if l <= len(qs) else ParamPoly.zero(AB)
        if s_mons:
            prefix = _sl_prefix(l)
            sl = build_ansatz(AnsatzSpec(S_ALPHABET, target, prefix))
            names.extend(unknown_name(prefix, i) for i in range(len(s_mons)))
            rhs = sl.map_alphabet(AB).mul_poly(p165 ** l)
        else:
            rhs = ParamPoly.zero(AB)
        rows.extend(coefficient_equations(q_l, rhs))
    system = LinearSystem(tuple(names))
    system.extend(rows)
    return _integer_rows(system), len(names)


def bench(backend, rows, ncols, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        data = [list(r) for r in rows]
        t0 = time.perf_counter()
        result = backend.echelon_int_rows(data, ncols)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    cases = [
        ("random 40x30 32-bit", *(lambda r: (r, 30))(
            synthetic_case(40, 30, 32, 1))),
        ("random 60x45 64-bit", *(lambda r: (r, 45))(
            synthetic_case(60, 45, 64, 2))),
        ("construction (-24, 6)", *construction_case(-24, 6)),
        ("construction (-30, 7)", *construction_case(-30, 7)),
    ]
    print("%-26s %12s %12s %8s" % ("case", "python [s]", "cython [s]",
                                   "speedup"))
    for name, rows, ncols in cases:
        t_py, r_py = bench(_rowreduce_py, rows, ncols)
        if _rowreduce_c is None:
            print("%-26s %12.4f %12s %8s" % (name, t_py, "n/a", "n/a"))
            continue
        t_c, r_c = bench(_rowreduce_c, rows, ncols)
        assert r_py == r_c, "backends disagree on %s" % name
        print("%-26s %12.4f %12.4f %7.2fx" % (name, t_py, t_c, t_py / t_c))


if __name__ == "__main__":
    main()
