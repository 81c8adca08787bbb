"""Closed forms for sequences from recres.recurrence: degree, leading
coefficient, constant term, and the resultant Res(r_n, r_{n-1}) -- all
evaluated from the instance data alone, without generating polynomials.

Writing i = i_d, i' = i_{d-1}, p = p_{i_d,d} (leading coefficient of
r_d), a_{k,s} = lc(g_s), a_{0,s} = g_s(0), the closed forms are

    deg r_n = k * (1 + m + ... + m^{n-d-1}) + i * m^{n-d}        (n >= d)

    L_n     = p^{m^{n-d}} * prod_{s=1}^{n-d} a_{k,d+s}^{m^{n-d-s}}
              except when i = i' and k = l, where the base becomes
              E = a_{k,d+1} p^m + v_{d+1} p_{i',d-1}^m:
              L_n = E^{m^{n-d-1}} * prod_{s=2}^{n-d} a_{k,d+s}^{m^{n-d-s}}

    C_n     = r_n(0): for l > 0 it is
              p_{0,d}^{m^{n-d}} * prod_{s=1}^{n-d} a_{0,d+s}^{m^{n-d-s}},
              for l = 0 it only satisfies the recurrence
              C_n = a_{0,n} C_{n-1}^m + v_n C_{n-2}^m and has no closed
              product form; the resultant formula then uses C^0 = 1.

    gamma(n) = deg r_n - deg(v_n x^l r_{n-2}^m)
             = k - l + m(i - i')                         for n = d+1
             = m^{n-d-1} (k + i(m-1)) + k - l            for n >= d+2

    R_n = (-1)^{sum_{s=d+1}^{n} m^{n-s} sigma(s)} * R_d^{m^{n-d}}
          * prod_{s=d+1}^{n} (L_{s-1}^{gamma(s)} v_s^{deg r_{s-1}}
                               C_{s-1}^l)^{m^{n-s}},

with sigma(s) = deg r_s * deg r_{s-1} + l * deg r_{s-1}.  The second
summand of sigma is the parity of Res(r_{s-1}, x)^l = ((-1)^{deg
r_{s-1}} r_{s-1}(0))^l; dropping it (a tempting simplification, since
most references quote the step with r_{s-1}(0)^l directly) makes the
formula wrong by a sign exactly when l and deg r_{s-1} are both odd.
Empty products are 1, as is 0^0 wherever an exponent vanishes.

R_d is always computed from the initial polynomials by
resultant_sylvester, never assumed.

FormulaContext memoizes per instance; a context is meant to be used
from one thread at a time, while distinct contexts are fully
independent.
"""

from __future__ import annotations

from .field import Scalar
from .poly import Poly
from .recurrence import (
    RecurrenceSpec,
    ValidationFailedError,
    validate,
)
from .resultant import resultant_sylvester

__all__ = [
    "degree_formula",
    "exponents",
    "step_sign_exponent",
    "FormulaContext",
    "schur_formula",
    "order_two_formula",
    "ZeroCoefficientError",
]


class ZeroCoefficientError(ValueError):
    """A coefficient that must be nonzero is zero."""


def _geom(m: int, count: int) -> int:
    """1 + m + ... + m^(count-1); 0 for count <= 0."""
    if count <= 0:
        return 0
    if m == 1:
        return count
    return (m**count - 1) // (m - 1)


def degree_formula(spec: RecurrenceSpec, n: int) -> int:
    """deg r_n from the instance data alone."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= spec.d:
        return spec.degrees[n]
    shift = n - spec.d
    return spec.k * _geom(spec.m, shift) + spec.degrees[spec.d] * spec.m**shift


def exponents(spec: RecurrenceSpec, n: int) -> tuple[int, int]:
    """(gamma, e) for step n >= d+1.

    gamma is the degree drop deg r_n - deg(v_n x^l r_{n-2}^m), the
    exponent of L_{n-1} in one unwound elimination step; e is
    deg r_n * deg r_{n-1}, which controls the swap sign.
    """
    d, m, k, l = spec.d, spec.m, spec.k, spec.l
    if n < d + 1:
        raise ValueError(f"exponents need n >= d+1 = {d + 1}")
    i_d, i_dm1 = spec.degrees[d], spec.degrees[d - 1]
    if n == d + 1:
        gamma = k - l + m * (i_d - i_dm1)
    else:
        gamma = m ** (n - d - 1) * (k + i_d * (m - 1)) + k - l
    e = degree_formula(spec, n) * degree_formula(spec, n - 1)
    return gamma, e


def step_sign_exponent(spec: RecurrenceSpec, n: int) -> int:
    """Parity exponent sigma(n) = deg r_n * deg r_{n-1} + l * deg r_{n-1}."""
    _, e = exponents(spec, n)
    return e + spec.l * degree_formula(spec, n - 1)


class FormulaContext:
    """Memoized closed-form evaluation for one instance."""

    def __init__(self, spec: RecurrenceSpec, *, allow_zero_v: bool = False):
        self.spec = spec
        self.allow_zero_v = allow_zero_v
        self._lead: dict[int, Scalar] = {}
        self._const: dict[int, Scalar] = {}
        self._resultant: dict[int, Scalar] = {}
        self._base: Scalar | None = None
        self._validated_to = spec.d

    # -- pieces ----------------------------------------------------------

    def _a_lead(self, s: int) -> Scalar:
        return self.spec.step_coeffs(s).g.coeff_at(self.spec.k)

    def _edge_base(self) -> Scalar:
        d, m = self.spec.d, self.spec.m
        first = self.spec.step_coeffs(d + 1)
        p_d = self.spec.initials[d].leading_coeff()
        p_dm1 = self.spec.initials[d - 1].leading_coeff()
        return self._a_lead(d + 1) * p_d**m + first.v * p_dm1**m

    def leading_term(self, n: int) -> Scalar:
        """L_n = lc(r_n) by closed form, n >= d."""
        spec = self.spec
        d, m, k, l = spec.d, spec.m, spec.k, spec.l
        if n < d:
            raise ValueError(f"leading_term needs n >= d = {d}")
        if n in self._lead:
            return self._lead[n]
        p_d = spec.initials[d].leading_coeff()
        if n == d:
            value = p_d
        elif spec.degrees[d] == spec.degrees[d - 1] and k == l:
            value = self._edge_base() ** (m ** (n - d - 1))
            for s in range(2, n - d + 1):
                value = value * self._a_lead(d + s) ** (m ** (n - d - s))
        else:
            value = p_d ** (m ** (n - d))
            for s in range(1, n - d + 1):
                value = value * self._a_lead(d + s) ** (m ** (n - d - s))
        self._lead[n] = value
        return value

    def constant_term(self, n: int) -> Scalar:
        """The C_n the resultant formula uses: 1 for l = 0, else the
        closed product form of r_n(0)."""
        spec = self.spec
        d, m = spec.d, spec.m
        if n < d:
            raise ValueError(f"constant_term needs n >= d = {d}")
        if spec.l == 0:
            return Scalar(spec.descriptor, 1)
        value = spec.initials[d].coeff_at(0) ** (m ** (n - d))
        for s in range(1, n - d + 1):
            a0 = spec.step_coeffs(d + s).g.coeff_at(0)
            value = value * a0 ** (m ** (n - d - s))
        return value

    def constant_value(self, n: int) -> Scalar:
        """The true r_n(0), by the constant-term recurrence
        C_n = a_{0,n} C_{n-1}^m + v_n C_{n-2}^m (v-term absent for l > 0)."""
        spec = self.spec
        if n < 0:
            raise ValueError("n must be >= 0")
        if n <= spec.d:
            return spec.initials[n].coeff_at(0)
        if n in self._const:
            return self._const[n]

        def known(s: int) -> Scalar:
            return spec.initials[s].coeff_at(0) if s <= spec.d else self._const[s]

        for s in range(spec.d + 1, n + 1):
            if s in self._const:
                continue
            coeffs = spec.step_coeffs(s)
            value = coeffs.g.coeff_at(0) * known(s - 1) ** spec.m
            if spec.l == 0:
                value = value + coeffs.v * known(s - 2) ** spec.m
            self._const[s] = value
        return self._const[n]

    def base_resultant(self) -> Scalar:
        """R_d = Res(r_d, r_{d-1}), computed by resultant_sylvester."""
        if self._base is None:
            self._base = resultant_sylvester(self.spec.initials[self.spec.d], self.spec.initials[self.spec.d - 1])
        return self._base

    # -- the main formula --------------------------------------------------

    def resultant_formula(self, n: int) -> Scalar:
        """Res(r_n, r_{n-1}) by the closed form, for n >= d+1.

        Validates the instance once up to n; the sign exponent is
        accumulated in unbounded integers and reduced mod 2 at the end.
        """
        spec = self.spec
        d, m, l = spec.d, spec.m, spec.l
        if n < d + 1:
            raise ValueError(f"resultant_formula needs n >= d+1 = {d + 1}")
        if n in self._resultant:
            return self._resultant[n]
        if n > self._validated_to:
            report = validate(spec, n, allow_zero_v=self.allow_zero_v)
            if not report.ok:
                raise ValidationFailedError(report)
            self._validated_to = n
        sign_exp = 0
        value = self.base_resultant() ** (m ** (n - d))
        for s in range(d + 1, n + 1):
            weight = m ** (n - s)
            sign_exp += weight * step_sign_exponent(spec, s)
            gamma, _ = exponents(spec, s)
            deg_prev = degree_formula(spec, s - 1)
            factor = (
                self.leading_term(s - 1) ** gamma
                * spec.step_coeffs(s).v ** deg_prev
                * self.constant_term(s - 1) ** l
            )
            value = value * factor**weight
        if sign_exp % 2:
            value = -value
        self._resultant[n] = value
        return value


def schur_formula(a: list[Scalar], c: list[Scalar], n: int) -> Scalar:
    """Classical resultant of consecutive three-term-recurrence polynomials:

        Res(r_n, r_{n-1}) = (-1)^{n(n-1)/2} prod_{i=1}^{n-1} a_i^{2(n-i)} c_{i+1}^i

    for r_n = (a_n x + b_n) r_{n-1} - c_n r_{n-2}, r_0 = 1,
    r_1 = a_1 x + b_1.  ``a[i]`` and ``c[i]`` hold a_{i+1} and c_{i+1}.
    """
    if n < 2:
        raise ValueError("the formula starts at n = 2")
    if len(a) < n - 1 or len(c) < n:
        raise ValueError(f"need a_1..a_{n - 1} and c_2..c_{n}")
    desc = a[0].descriptor
    value = Scalar(desc, 1)
    for i in range(1, n):
        a_i, c_next = a[i - 1], c[i]
        if a_i.is_zero() or c_next.is_zero():
            raise ZeroCoefficientError(f"a_{i} and c_{i + 1} must be nonzero")
        value = value * a_i ** (2 * (n - i)) * c_next**i
    if (n * (n - 1) // 2) % 2:
        value = -value
    return value


def order_two_formula(initial0: Poly, initial1: Poly, t_tables, n: int) -> Scalar:
    """Independent closed form in order-two notation.

    Takes the same inputs as recurrence.order_two_recurrence -- initials
    r_0 (degree i), r_1 (degree j) and per-step tables
    (t_{0,s}, ..., t_{m,s}) -- and evaluates

        R_n = (-1)^{sum_{s=2}^n m^{n-s} sigma(s)}
              * prod_{s=2}^n (L_{s-1}^{gamma(s)} v_s^{deg r_{s-1}}
                               C_{s-1}^l)^{m^{n-s}} * R_1^{m^{n-1}}

    using its own degree/L/C expressions written in (i, j, k, l, m)
    terms, with a_{k,s} = lc(t_{0,s}), a_{0,s} = t_{0,s}(0) and
    v_s x^l = t_{m,s}.  This shares nothing with FormulaContext except
    resultant_sylvester for the base case R_1, so agreement between the
    two is a meaningful cross-check.
    """
    if n < 2:
        raise ValueError("the formula starts at n = 2")
    desc = initial0.descriptor
    i, j = initial0.degree(), initial1.degree()
    m = len(t_tables[0]) - 1
    k = t_tables[0][0].degree()
    l = t_tables[0][m].degree()

    def deg(s: int) -> int:
        if s == 0:
            return i
        if s == 1:
            return j
        return k * _geom(m, s - 1) + j * m ** (s - 1)

    def gamma(s: int) -> int:
        if s == 2:
            return k - l + m * (j - i)
        return m ** (s - 2) * (k + j * (m - 1)) + k - l

    def a_lead(s: int) -> Scalar:
        return t_tables[s - 2][0].coeff_at(k)

    def a_const(s: int) -> Scalar:
        return t_tables[s - 2][0].coeff_at(0)

    def v_of(s: int) -> Scalar:
        return t_tables[s - 2][m].coeff_at(l)

    q_j = initial1.leading_coeff()
    p_i = initial0.leading_coeff()
    q_0 = initial1.coeff_at(0)

    def leading(s: int) -> Scalar:
        if s <= 1:
            return q_j
        if i == j and k == l:
            value = (a_lead(2) * q_j**m + v_of(2) * p_i**m) ** (m ** (s - 2))
            for sigma in range(3, s + 1):
                value = value * a_lead(sigma) ** (m ** (s - sigma))
        else:
            value = q_j ** (m ** (s - 1))
            for sigma in range(2, s + 1):
                value = value * a_lead(sigma) ** (m ** (s - sigma))
        return value

    def constant(s: int) -> Scalar:
        if l == 0:
            return Scalar(desc, 1)
        value = q_0 ** (m ** (s - 1))
        for sigma in range(2, s + 1):
            value = value * a_const(sigma) ** (m ** (s - sigma))
        return value

    base = resultant_sylvester(initial1, initial0)
    sign_exp = 0
    value = base ** (m ** (n - 1))
    for s in range(2, n + 1):
        weight = m ** (n - s)
        sign_exp += weight * (deg(s) * deg(s - 1) + l * deg(s - 1))
        factor = leading(s - 1) ** gamma(s) * v_of(s) ** deg(s - 1) * constant(s - 1) ** l
        value = value * factor**weight
    if sign_exp % 2:
        value = -value
    return value
