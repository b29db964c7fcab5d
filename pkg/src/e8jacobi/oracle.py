"""Numeric verification oracle for E8 Jacobi forms.

Everything here is arbitrary-precision complex arithmetic (mpmath),
fully independent of the symbolic construction: theta functions are
summed directly with a derived truncation bound, the holomorphic
generators A_m and B_m are built from theta functions, and the
meromorphic generators divide by numerically evaluated E4 and Delta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mp

from . import e8
from .generators import meromorphic_images, p16_5
from .grading import AB, Frac, Poly, S_ALPHABET, ab


class OracleError(RuntimeError):
    pass


class NearSingularError(OracleError):
    """Evaluation point too close to a zero of E4 or Delta."""


class PrecisionUnreachableError(OracleError):
    """The truncation bound cannot meet the precision for this argument."""


_THETA_TERM_CAP = 200_000


@dataclass
class EvalContext:
    """Numeric evaluation context.

    `theta_terms` is the derived truncation bound for one-variable theta
    sums at the context's minimal Im(tau) and maximal |Im z|; per-call
    bounds are derived from the actual arguments the same way.
    """

    precision: int = 50
    tolerance: float = 1e-30
    min_im_tau: float = 0.1
    max_im_z: float = 1.0
    guard_digits: int = 10
    singular_threshold: float = 1e-12
    theta_terms: int = field(init=False)
    _theta_cache: Dict[tuple, mpmath.mpc] = field(default_factory=dict,
                                                 repr=False)
    _gen_cache: Dict[tuple, mpmath.mpc] = field(default_factory=dict,
                                                repr=False)

    def __post_init__(self):
        self.theta_terms = _theta_bound(self.min_im_tau, self.max_im_z,
                                        self.work_digits)

    @property
    def work_digits(self) -> int:
        return self.precision + self.guard_digits

    def boosted(self, extra_digits: int) -> "EvalContext":
        return EvalContext(precision=self.precision + extra_digits,
                           tolerance=self.tolerance,
                           min_im_tau=self.min_im_tau,
                           max_im_z=self.max_im_z,
                           guard_digits=self.guard_digits,
                           singular_threshold=self.singular_threshold)


@dataclass(frozen=True)
class ComplexSample:
    tau: complex
    z: Tuple[complex, ...]

    def __post_init__(self):
        if mpmath.im(self.tau) <= 0:
            raise ValueError("tau must lie in the upper half plane")
        if len(self.z) != 8:
            raise ValueError("z must have 8 components")


def _theta_bound(im_tau: float, im_z: float, digits: int) -> int:
    """Smallest N with |y^n q^{n^2/2}| summable below 10^-digits for
    |n| > N: solve pi*im_tau*n^2 - 2*pi*|im_z|*n >= (digits+3)*ln(10)."""
    if im_tau <= 0:
        raise PrecisionUnreachableError("Im tau must be positive")
    L = (digits + 3) * mpmath.log(10)
    a = mpmath.pi * im_tau
    b = 2 * mpmath.pi * abs(im_z)
    n = int(mpmath.ceil((b + mpmath.sqrt(b * b + 4 * a * L)) / (2 * a))) + 2
    if n > _THETA_TERM_CAP:
        raise PrecisionUnreachableError(
            "theta truncation bound %d exceeds cap for Im tau = %g"
            % (n, im_tau))
    return n


def theta(kind: int, z, tau, ctx: EvalContext) -> mpmath.mpc:
    """Jacobi theta functions; y = e^{2 pi i z}, q = e^{2 pi i tau}:
    theta3 = sum_n y^n q^{n^2/2} and its three companions."""
    z = mpmath.mpc(z)
    tau = mpmath.mpc(tau)
    key = (kind, z, tau)
    cached = ctx._theta_cache.get(key)
    if cached is not None:
        return cached
    with mp.workdps(ctx.work_digits):
        n_max = _theta_bound(float(mpmath.im(tau)), float(abs(mpmath.im(z))),
                             ctx.work_digits)
        total = mp.mpc(0)
        if kind in (3, 4):
            for n in range(-n_max, n_max + 1):
                term = mpmath.expjpi(tau * n * n + 2 * n * z)
                if kind == 4 and n % 2:
                    term = -term
                total += term
        elif kind in (1, 2):
            for n in range(-n_max, n_max + 1):
                a = n - mp.mpf(1) / 2
                term = mpmath.expjpi(tau * a * a + 2 * a * z)
                if kind == 1 and n % 2:
                    term = -term
                total += term
            if kind == 1:
                total *= mp.mpc(0, 1)
        else:
            raise ValueError("theta kind must be 1..4")
    ctx._theta_cache[key] = total
    return total


def theta0(kind: int, tau, ctx: EvalContext) -> mpmath.mpc:
    return theta(kind, 0, tau, ctx)


@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """Exact Bernoulli numbers via x/(e^x - 1) = sum B_k x^k / k!."""
    if k == 0:
        return Fraction(1)
    s = Fraction(0)
    for j in range(k):
        s += comb(k + 1, j) * bernoulli_number(j)
    return -s / (k + 1)


def eisenstein(n: int, tau, ctx: EvalContext) -> mpmath.mpc:
    """E_{2n}(tau) = 1 - (4n/B_{2n}) sum_k k^{2n-1} q^k/(1-q^k)."""
    tau = mpmath.mpc(tau)
    key = ("E", 2 * n, tau)
    cached = ctx._gen_cache.get(key)
    if cached is not None:
        return cached
    with mp.workdps(ctx.work_digits):
        q = mpmath.expjpi(2 * tau)
        absq = abs(q)
        if absq >= 1:
            raise PrecisionUnreachableError("tau not in the upper half plane")
        eps = mp.mpf(10) ** (-ctx.work_digits - 5)
        b = bernoulli_number(2 * n)
        factor = mp.mpf(-4 * n * b.denominator) / b.numerator
        total = mp.mpc(0)
        qk = mp.mpc(1)
        k = 0
        while True:
            k += 1
            qk *= q
            term = (k ** (2 * n - 1)) * qk / (1 - qk)
            total += term
            if abs(term) < eps and absq ** k < eps:
                break
            if k > _THETA_TERM_CAP:
                raise PrecisionUnreachableError("Eisenstein sum does not "
                                                "converge fast enough")
        value = 1 + factor * total
    ctx._gen_cache[key] = value
    return value


def eta(tau, ctx: EvalContext) -> mpmath.mpc:
    """Dedekind eta: q^{1/24} prod (1 - q^n)."""
    tau = mpmath.mpc(tau)
    key = ("eta", tau)
    cached = ctx._gen_cache.get(key)
    if cached is not None:
        return cached
    with mp.workdps(ctx.work_digits):
        q = mpmath.expjpi(2 * tau)
        value = mpmath.expjpi(tau / 12) * mpmath.qp(q)
    ctx._gen_cache[key] = value
    return value


def e_j(j: int, tau, ctx: EvalContext) -> mpmath.mpc:
    with mp.workdps(ctx.work_digits):
        t2 = theta0(2, tau, ctx) ** 4
        t3 = theta0(3, tau, ctx) ** 4
        t4 = theta0(4, tau, ctx) ** 4
        if j == 1:
            return (t3 + t4) / 12
        if j == 2:
            return (t2 - t4) / 12
        if j == 3:
            return (-t2 - t3) / 12
        raise ValueError("e_j defined for j = 1, 2, 3")


def h0(tau, ctx: EvalContext) -> mpmath.mpc:
    with mp.workdps(ctx.work_digits):
        return (theta0(3, 2 * tau, ctx) * theta0(3, 6 * tau, ctx)
                + theta0(2, 2 * tau, ctx) * theta0(2, 6 * tau, ctx))


def special_functions(kind: str, args: tuple, ctx: EvalContext) -> mpmath.mpc:
    """Uniform dispatcher: theta1..theta4(z, tau), eta(tau), E2n(n, tau),
    e1..e3(tau), h0(tau)."""
    if kind.startswith("theta"):
        z, tau = args
        return theta(int(kind[5]), z, tau, ctx)
    if kind == "eta":
        return eta(args[0], ctx)
    if kind == "E2n":
        n, tau = args
        return eisenstein(n, tau, ctx)
    if kind in ("e1", "e2", "e3"):
        return e_j(int(kind[1]), args[0], ctx)
    if kind == "h0":
        return h0(args[0], ctx)
    raise ValueError("unknown special function %r" % kind)


def theta_E8(sample: ComplexSample, ctx: EvalContext) -> mpmath.mpc:
    """Theta function of the E8 lattice via the product identity:
    (1/2) sum_{k=1}^4 prod_{j=1}^8 theta_k(z_j, tau)."""
    with mp.workdps(ctx.work_digits):
        total = mp.mpc(0)
        for kind in range(1, 5):
            prod = mp.mpc(1)
            for zj in sample.z:
                prod *= theta(kind, zj, sample.tau, ctx)
            total += prod
        return total / 2


def theta_E8_lattice(sample: ComplexSample, ctx: EvalContext,
                     max_norm: int = 8) -> mpmath.mpc:
    """Direct lattice sum over all vectors of norm <= max_norm; a slow
    cross-check for theta_E8, accurate only when q^{max_norm/2} is
    negligible."""
    with mp.workdps(ctx.work_digits):
        total = mp.mpc(0)
        for norm in range(0, max_norm + 1):
            for v in e8.e8_vectors_of_norm(norm):
                # doubled coordinates: w = v/2, w^2 = norm
                zw2 = sum(zj * vj for zj, vj in zip(sample.z, v))
                total += mpmath.expjpi(sample.tau * norm + zw2)
        return total


def _scaled(sample: ComplexSample, tau, z_mult: int) -> ComplexSample:
    return ComplexSample(tau, tuple(z_mult * zj for zj in sample.z))


def _a1(sample: ComplexSample, ctx: EvalContext) -> mpmath.mpc:
    return theta_E8(sample, ctx)


def eval_AB(name: str, sample: ComplexSample, ctx: EvalContext) -> mpmath.mpc:
    """The holomorphic generators A1..A5, B2..B6 (plus E4, E6 for
    convenience), from their defining theta expressions."""
    key = (name, sample.tau, sample.z)
    cached = ctx._gen_cache.get(key)
    if cached is not None:
        return cached
    tau = mpmath.mpc(sample.tau)
    with mp.workdps(ctx.work_digits):
        if name == "E4":
            value = eisenstein(2, tau, ctx)
        elif name == "E6":
            value = eisenstein(3, tau, ctx)
        elif name == "A1":
            value = _a1(sample, ctx)
        elif name == "A4":
            value = _a1(_scaled(sample, tau, 2), ctx)
        elif name in ("A2", "A3", "A5"):
            m = int(name[1])
            value = _a1(_scaled(sample, m * tau, m), ctx)
            for k in range(m):
                value += _a1(_scaled(sample, (tau + k) / m, 1), ctx) / m ** 4
            value *= mp.mpf(m ** 3) / (m ** 3 + 1)
        elif name == "B2":
            value = (e_j(1, tau, ctx) * _a1(_scaled(sample, 2 * tau, 2), ctx)
                     + e_j(3, tau, ctx)
                     * _a1(_scaled(sample, tau / 2, 1), ctx) / 16
                     + e_j(2, tau, ctx)
                     * _a1(_scaled(sample, (tau + 1) / 2, 1), ctx) / 16)
            value *= mp.mpf(32) / 5
        elif name == "B3":
            value = h0(tau, ctx) ** 2 * _a1(_scaled(sample, 3 * tau, 3), ctx)
            for k in range(3):
                value -= (h0((tau + k) / 3, ctx) ** 2
                          * _a1(_scaled(sample, (tau + k) / 3, 1), ctx) / 243)
            value *= mp.mpf(81) / 80
        elif name == "B4":
            t4 = theta0(4, 2 * tau, ctx) ** 4
            value = (t4 * _a1(_scaled(sample, 4 * tau, 4), ctx)
                     - t4 * _a1(_scaled(sample, tau + mp.mpf(1) / 2, 2),
                                ctx) / 16)
            for k in range(4):
                value -= (theta0(2, (tau + k) / 2, ctx) ** 4
                          * _a1(_scaled(sample, (tau + k) / 4, 1), ctx)
                          / (4 * 256))
            value *= mp.mpf(16) / 15
        elif name == "B6":
            value = h0(tau, ctx) ** 2 * _a1(_scaled(sample, 6 * tau, 6), ctx)
            for k in range(2):
                value += (h0(tau + k, ctx) ** 2
                          * _a1(_scaled(sample, (3 * tau + 3 * k) / 2, 3),
                                ctx) / 16)
            for k in range(3):
                value -= (h0((tau + k) / 3, ctx) ** 2
                          * _a1(_scaled(sample, (2 * tau + 2 * k) / 3, 2),
                                ctx) / 243)
            for k in range(6):
                value -= (h0((tau + k) / 3, ctx) ** 2
                          * _a1(_scaled(sample, (tau + k) / 6, 1), ctx)
                          / (3 * 1296))
            value *= mp.mpf(9) / 10
        else:
            raise ValueError("unknown holomorphic generator %r" % name)
    ctx._gen_cache[key] = value
    return value


def delta_value(tau, ctx: EvalContext) -> mpmath.mpc:
    return eta(tau, ctx) ** 24


def _check_regular_point(tau, ctx: EvalContext) -> None:
    if abs(eisenstein(2, tau, ctx)) < ctx.singular_threshold:
        raise NearSingularError("E4 vanishes at this tau")
    if abs(delta_value(tau, ctx)) < ctx.singular_threshold:
        raise NearSingularError("Delta too small at this tau")


def eval_frac(frac: Frac, sample: ComplexSample,
              ctx: EvalContext) -> mpmath.mpc:
    """Evaluate num / (E4^p Delta^q) with the numerator a polynomial in
    the holomorphic generators."""
    _check_regular_point(sample.tau, ctx)
    with mp.workdps(ctx.work_digits):
        num = eval_poly(frac.num, sample, ctx)
        denom = (eisenstein(2, sample.tau, ctx) ** frac.e4_pow
                 * delta_value(sample.tau, ctx) ** frac.delta_pow)
        return num / denom


def eval_ab(name: str, sample: ComplexSample, ctx: EvalContext) -> mpmath.mpc:
    """The meromorphic generators a2..a4, b1..b6 (plus E4, E6), via their
    exact expressions over the holomorphic generators."""
    if name in ("E4", "E6"):
        return eval_AB(name, sample, ctx)
    key = (name, sample.tau, sample.z)
    cached = ctx._gen_cache.get(key)
    if cached is not None:
        return cached
    images = meromorphic_images()
    if name not in images:
        raise ValueError("unknown meromorphic generator %r" % name)
    value = eval_frac(images[name], sample, ctx)
    ctx._gen_cache[key] = value
    return value


def eval_poly(form: Poly, sample: ComplexSample,
              ctx: EvalContext) -> mpmath.mpc:
    """Evaluate a polynomial over any of the three alphabets."""
    if form.alphabet is AB or form.alphabet is S_ALPHABET:
        gen_eval = eval_AB
    elif form.alphabet is ab:
        gen_eval = eval_ab
    else:
        raise ValueError("unknown alphabet %r" % (form.alphabet,))
    symbols = form.alphabet.symbols
    with mp.workdps(ctx.work_digits):
        total = mp.mpc(0)
        for exps, coeff in form.terms.items():
            term = mp.mpf(coeff.numerator) / coeff.denominator
            for sym, e in zip(symbols, exps):
                if e:
                    term *= gen_eval(sym, sample, ctx) ** e
            total += term
        return total


def eval_certified(cert, sample: ComplexSample,
                   ctx: EvalContext) -> mpmath.mpc:
    """Evaluate a form through its certificate representation
    (R + sum_l P^l S_l / E4^l) / Delta^n.

    Near a zero of E4 the numerators P^l S_l vanish like E4^l, so the
    working precision is raised by the cancellation depth and the
    quotient stays accurate; this is how holomorphic forms are evaluated
    where the meromorphic generators blow up.
    """
    e4 = eval_AB("E4", sample, ctx)
    l_max = max((l for l, _ in cert.s_parts), default=0)
    extra = 0
    if l_max and abs(e4) < 1:
        extra = int(mpmath.ceil(-mpmath.log10(abs(e4)))) * l_max + 10
    wctx = ctx.boosted(extra) if extra else ctx
    with mp.workdps(wctx.work_digits):
        e4 = eval_AB("E4", sample, wctx)
        value = eval_poly(cert.remainder, sample, wctx)
        if cert.s_parts:
            p_val = eval_poly(p16_5(), sample, wctx)
            for l, s_l in cert.s_parts:
                value += (p_val / e4) ** l * eval_poly(s_l, sample, wctx)
        return value / delta_value(sample.tau, wctx) ** cert.n


def orbit_character(j: int, z: Sequence[complex],
                    ctx: Optional[EvalContext] = None) -> mpmath.mpc:
    """w_j(z) = sum over the Weyl orbit of the j-th fundamental weight of
    e^{2 pi i v . z}."""
    digits = ctx.work_digits if ctx else mp.dps
    with mp.workdps(digits):
        total = mp.mpc(0)
        for v in e8.weyl_orbit(j):
            # v is doubled, so 2 pi i (v/2 . z) = pi i sum v_j z_j
            total += mpmath.expjpi(sum(a * b for a, b in zip(v, z)))
        return total


def q_laurent_probe(form: Poly, z: Sequence[complex], ctx: EvalContext,
                    radius: float = 1 / 200, count: int = 16,
                    evaluate=None) -> Dict[int, mpmath.mpc]:
    """Approximate q-Laurent coefficients c_{-2}..c_{+2} of the form at
    fixed z, by a discrete Fourier transform over `count` points on the
    circle |q| = radius.

    A genuine weak Jacobi form has negligible c_{-1}, c_{-2}; a form
    with poles in tau (the circle passes close to the fundamental-domain
    zero of E4) shows large spurious coefficients instead.
    """
    evaluate = evaluate or eval_poly
    with mp.workdps(ctx.work_digits):
        im_tau = -mpmath.log(mpmath.mpf(radius)) / (2 * mpmath.pi)
        values = []
        for j in range(count):
            tau = mp.mpf(j) / count + mp.mpc(0, 1) * im_tau
            values.append(evaluate(form, ComplexSample(tau, tuple(z)), ctx))
        coeffs = {}
        for t in range(-2, 3):
            acc = mp.mpc(0)
            for j, v in enumerate(values):
                acc += v * mpmath.expjpi(mp.mpf(-2 * t * j) / count)
            coeffs[t] = acc / (count * mp.mpf(radius) ** t)
        return coeffs


def probe_is_regular(coeffs: Dict[int, mpmath.mpc],
                     rel_tol: float = 1e-12) -> bool:
    """Regularity verdict: negative-power magnitudes negligible against
    the scale of the regular part.

    For a regular form the measured c_{-1}, c_{-2} sit at the probe's
    aliasing floor (~1e-27 of the regular scale with 16 circle points);
    a form with a pole inside the circle shows them at ~1e-3 of the
    scale, so the two cases are separated by many orders of magnitude.
    """
    scale = max(abs(coeffs[t]) for t in (0, 1, 2))
    bound = rel_tol * max(1.0, float(scale))
    return all(abs(coeffs[t]) < bound for t in (-1, -2))


def _reflect_complex(z: Sequence, alpha2: Tuple[int, ...]) -> tuple:
    """Reflection of a complex 8-vector in a norm-2 root given in doubled
    coordinates: z -> z - (z . alpha) alpha."""
    s = sum(a * b for a, b in zip(z, alpha2)) / 2   # z . alpha
    return tuple(zj - s * aj / 2 for zj, aj in zip(z, alpha2))


@dataclass
class AxiomReport:
    weight: int
    index: int
    samples: int
    quasi_periodicity: float
    modular_s: float
    modular_t: float
    weyl: float
    regular: bool
    probe_coeffs: Dict[int, mpmath.mpc]

    @property
    def max_residual(self) -> float:
        return max(self.quasi_periodicity, self.modular_s,
                   self.modular_t, self.weyl)

    def passed(self, tolerance: float) -> bool:
        return self.max_residual < tolerance and self.regular


def _rel(a, b) -> float:
    return float(abs(a - b) / max(1, abs(a), abs(b)))


def check_axioms(form: Poly, k: int, m: int, samples: int, ctx: EvalContext,
                 seed: int = 0, evaluate=None,
                 probe: bool = True) -> AxiomReport:
    """Numeric residuals of the four Jacobi-form axioms.

    (i) Weyl invariance under a random simple reflection; (ii)
    quasi-periodicity under z -> z + tau*alpha + beta for random lattice
    alpha, beta; (iii) the S and T modular transformations; (iv) Fourier
    regularity via the q-Laurent probe. Near-singular samples are
    redrawn (bounded retries).
    """
    import random
    rng = random.Random(seed)
    evaluate = evaluate or eval_poly
    roots = e8.e8_vectors_of_norm(2)
    qp = ms = mt = wy = 0.0
    done = 0
    attempts = 0
    with mp.workdps(ctx.work_digits):
        while done < samples:
            attempts += 1
            if attempts > 10 * samples + 20:
                raise OracleError("could not draw enough regular samples")
            tau = mp.mpc(rng.uniform(-0.4, 0.4), rng.uniform(0.9, 1.6))
            z = tuple(mp.mpc(rng.uniform(-0.2, 0.2), rng.uniform(-0.15, 0.15))
                      for _ in range(8))
            sample = ComplexSample(tau, z)
            try:
                base = evaluate(form, sample, ctx)

                alpha2 = rng.choice(roots)
                beta2 = rng.choice(roots)
                z_shift = tuple(zj + tau * aj / 2 + bj / 2
                                for zj, aj, bj in zip(z, alpha2, beta2))
                shifted = evaluate(form, ComplexSample(tau, z_shift), ctx)
                za = sum(zj * aj for zj, aj in zip(z, alpha2))  # 2 z.alpha
                factor = mpmath.expjpi(-m * (2 * tau + za))     # alpha^2 = 2
                qp = max(qp, _rel(shifted, factor * base))

                z_s = tuple(zj / tau for zj in z)
                s_val = evaluate(form, ComplexSample(-1 / tau, z_s), ctx)
                z2 = sum(zj * zj for zj in z)
                factor = tau ** k * mpmath.expjpi(m * z2 / tau)
                ms = max(ms, _rel(s_val, factor * base))

                t_val = evaluate(form, ComplexSample(tau + 1, z), ctx)
                mt = max(mt, _rel(t_val, base))

                alpha2 = rng.choice(e8.SIMPLE_ROOTS)
                w_val = evaluate(
                    form, ComplexSample(tau, _reflect_complex(z, alpha2)), ctx)
                wy = max(wy, _rel(w_val, base))
            except NearSingularError:
                continue
            done += 1

        if probe:
            rng_z = random.Random(seed + 1)
            z_fixed = tuple(
                mp.mpc(rng_z.uniform(0.05, 0.2), rng_z.uniform(-0.1, 0.1))
                for _ in range(8))
            coeffs = q_laurent_probe(form, z_fixed, ctx, evaluate=evaluate)
            regular = probe_is_regular(coeffs)
        else:
            coeffs = {}
            regular = True
    return AxiomReport(k, m, samples, qp, ms, mt, wy, regular, coeffs)
