"""Polynomial sequences defined by a nonlinear recurrence of order d+1.

An instance over a field K is the data

    A = (i_0 <= ... <= i_d, k >= l, m >= 1),
    initial polynomials r_0, ..., r_d with deg r_s = i_s exactly,
    per-step tables: g_n of degree exactly k, a coefficient v_n in K,
    and t-terms (alpha, t_{alpha,n}) indexed by multi-indices
    alpha = (alpha_0, ..., alpha_d) with |alpha| < m,

which generates, for n > d,

    r_n = g_n * r_{n-1}^m
        + sum_{|alpha| < m} t_{alpha,n}
              * r_{n-1}^{alpha_0} * r_{n-2}^{alpha_1} * ... * r_{n-d-1}^{alpha_d}
              * r_{n-1}
        + v_n * x^l * r_{n-2}^m.

Note the extra r_{n-1} factor on every t-term.  The step coefficients
are explicit per-step tables, not symbolic functions of n, so an
instance is a closed, serializable object (the JSON schema lives in
recres.cli).

`validate` checks every hypothesis the closed forms in
recres.closedform rely on; `generate` iterates the step and asserts
each produced degree against the closed-form degree, so a violated
hypothesis surfaces immediately as DegreeMismatchError rather than as
a silently wrong resultant.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .field import FieldDescriptor, Scalar
from .poly import Poly

__all__ = [
    "TTerm",
    "StepCoeffs",
    "RecurrenceSpec",
    "Violation",
    "ValidationReport",
    "validate",
    "step",
    "generate",
    "schur_recurrence",
    "linear_recurrence",
    "order_two_recurrence",
    "MissingStepError",
    "WindowSizeError",
    "ValidationFailedError",
    "DegreeMismatchError",
    "InvalidParamsError",
]


class MissingStepError(KeyError):
    """No step table for a required index n."""

    def __init__(self, n: int):
        super().__init__(n)
        self.n = n

    def __str__(self) -> str:
        return f"no step table for n = {self.n}"


class WindowSizeError(ValueError):
    """step() received a window whose length is not d+1."""


class ValidationFailedError(ValueError):
    """Operation required a valid instance; carries the report."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(str(report))
        self.report = report


class DegreeMismatchError(AssertionError):
    """A generated polynomial's degree deviates from the closed form.

    Signals a violated hypothesis (see validate) or an implementation
    bug; either way the closed-form resultant would be meaningless.
    """

    def __init__(self, n: int, expected: int, actual):
        super().__init__(f"deg r_{n} = {actual}, closed form predicts {expected}")
        self.n = n
        self.expected = expected
        self.actual = actual


class InvalidParamsError(ValueError):
    """Preset constructor parameters violate the preset's constraints."""


@dataclass(frozen=True)
class TTerm:
    """One middle term: multi-index alpha plus its coefficient polynomial."""

    alpha: tuple[int, ...]
    poly: Poly


@dataclass(frozen=True)
class StepCoeffs:
    """Coefficient tables for one step n: g_n, v_n and the t-terms."""

    g: Poly
    v: Scalar
    t_terms: tuple[TTerm, ...] = ()


@dataclass(frozen=True, eq=True)
class RecurrenceSpec:
    """One full instance; immutable after construction.

    Construction is permissive: structural soundness only.  Semantic
    hypotheses are checked by `validate`, which reports violations
    instead of raising, so broken instances can be inspected.
    """

    descriptor: FieldDescriptor
    d: int
    m: int
    k: int
    l: int
    degrees: tuple[int, ...]
    initials: tuple[Poly, ...]
    steps: Mapping[int, StepCoeffs]
    name: str | None = None

    def step_coeffs(self, n: int) -> StepCoeffs:
        try:
            return self.steps[n]
        except KeyError:
            raise MissingStepError(n) from None


@dataclass(frozen=True)
class Violation:
    code: str
    n: int | None
    detail: str

    def __str__(self) -> str:
        where = f" at n={self.n}" if self.n is not None else ""
        return f"{self.code}{where}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = dc_field(default_factory=list)
    warnings: list[Violation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok and not self.warnings:
            return "ok"
        lines = [str(v) for v in self.violations]
        lines += [f"warning: {w}" for w in self.warnings]
        return "; ".join(lines)


def _edge_branch(spec: RecurrenceSpec) -> bool:
    return spec.degrees[spec.d] == spec.degrees[spec.d - 1] and spec.k == spec.l


def validate(spec: RecurrenceSpec, up_to: int, *, allow_zero_v: bool = False) -> ValidationReport:
    """Check every hypothesis for steps d+1 .. up_to.

    Violation codes:

    * Membership          -- (i_0..i_d, k, l, m) outside the admissible set
                             (degrees not nondecreasing, k < l, m < 1, d < 1)
    * InitialDegree       -- deg(initials[s]) != i_s
    * GDegree             -- deg(g_n) != k (in particular lc(g_n) = 0)
    * VZero               -- v_n = 0 (warning instead when allow_zero_v)
    * TConstant           -- t_{alpha,n}(0) != 0
    * TDegree             -- deg(t_{alpha,n}) >= deg(g_n)
    * TForbidden          -- k = 0 but a t-term is present
    * AlphaLength         -- alpha does not have d+1 entries
    * AlphaSum            -- |alpha| >= m (or a negative entry)
    * AlphaDuplicate      -- the same alpha twice in one step
    * LeadingProductZero  -- a_{k,n} * prod_s p_{i_s,s} = 0
    * EdgeCaseZero        -- i_d = i_{d-1} and k = l but
                             a_{k,d+1} p_{i_d,d}^m + v_{d+1} p_{i_{d-1},d-1}^m = 0
    * DegenerateDominance -- k = 0 and (m = 1 or i_d = 0): the top-degree
                             term then never dominates the v_n x^l r_{n-2}^m
                             term for n >= d+2, leading coefficients can
                             cancel, and the closed forms are not justified

    Missing step tables in the range are an error (MissingStepError),
    not a violation: the caller asked about steps that do not exist.
    """
    report = ValidationReport()
    bad = report.violations.append

    d, m, k, l = spec.d, spec.m, spec.k, spec.l
    degrees = spec.degrees

    if d < 1:
        bad(Violation("Membership", None, f"order parameter d must be >= 1, got {d}"))
        return report
    if m < 1:
        bad(Violation("Membership", None, f"m must be >= 1, got {m}"))
    if k < 0 or l < 0 or k < l:
        bad(Violation("Membership", None, f"need k >= l >= 0, got k={k}, l={l}"))
    if len(degrees) != d + 1:
        bad(Violation("Membership", None, f"expected {d + 1} initial degrees, got {len(degrees)}"))
        return report
    if any(degrees[s] > degrees[s + 1] for s in range(d)):
        bad(Violation("Membership", None, f"initial degrees {list(degrees)} are not nondecreasing"))
    if len(spec.initials) != d + 1:
        bad(Violation("InitialDegree", None, f"expected {d + 1} initial polynomials, got {len(spec.initials)}"))
        return report

    for s, (r, want) in enumerate(zip(spec.initials, degrees)):
        if r.degree() != want:
            bad(Violation("InitialDegree", None, f"deg(r_{s}) = {r.degree()}, declared i_{s} = {want}"))

    if k == 0 and (m == 1 or degrees[d] == 0) and report.ok:
        bad(
            Violation(
                "DegenerateDominance",
                None,
                f"k=0 with m={m}, i_d={degrees[d]}: the degree-growth argument "
                "behind the closed forms fails for n >= d+2",
            )
        )

    initial_lead = Scalar(spec.descriptor, 1)
    for r in spec.initials:
        initial_lead = initial_lead * r.leading_coeff()

    for n in range(d + 1, up_to + 1):
        coeffs = spec.step_coeffs(n)
        if coeffs.g.degree() != k:
            bad(Violation("GDegree", n, f"deg(g_{n}) = {coeffs.g.degree()}, expected exactly k = {k}"))
        if coeffs.v.is_zero():
            v = Violation("VZero", n, f"v_{n} = 0")
            if allow_zero_v:
                report.warnings.append(v)
            else:
                bad(v)
        if (initial_lead * coeffs.g.leading_coeff()).is_zero():
            bad(Violation("LeadingProductZero", n, "a_{k,n} * prod p_{i_s,s} vanishes"))
        seen: set[tuple[int, ...]] = set()
        for term in coeffs.t_terms:
            if k == 0:
                bad(Violation("TForbidden", n, "k = 0 admits no t-terms"))
                continue
            if len(term.alpha) != d + 1:
                bad(Violation("AlphaLength", n, f"alpha {term.alpha} needs {d + 1} entries"))
                continue
            if any(a < 0 for a in term.alpha) or sum(term.alpha) >= m:
                bad(Violation("AlphaSum", n, f"|{term.alpha}| must be < m = {m}"))
            if term.alpha in seen:
                bad(Violation("AlphaDuplicate", n, f"alpha {term.alpha} repeated"))
            seen.add(term.alpha)
            if not term.poly.coeff_at(0).is_zero():
                bad(Violation("TConstant", n, f"t_{term.alpha}(0) != 0"))
            if not term.poly.is_zero() and term.poly.degree() >= coeffs.g.degree():
                bad(Violation("TDegree", n, f"deg t_{term.alpha} = {term.poly.degree()} >= deg g = {coeffs.g.degree()}"))

    if _edge_branch(spec) and up_to >= d + 1 and report.ok:
        first = spec.step_coeffs(d + 1)
        lead_d = spec.initials[d].leading_coeff()
        lead_dm1 = spec.initials[d - 1].leading_coeff()
        edge = first.g.coeff_at(k) * lead_d**m + first.v * lead_dm1**m
        if edge.is_zero():
            bad(
                Violation(
                    "EdgeCaseZero",
                    d + 1,
                    "a_{k,d+1} p_{i_d,d}^m + v_{d+1} p_{i_{d-1},d-1}^m = 0",
                )
            )

    return report


def step(spec: RecurrenceSpec, window: Sequence[Poly], n: int) -> Poly:
    """Apply one recurrence step.

    ``window`` holds (r_{n-1}, r_{n-2}, ..., r_{n-d-1}), newest first.
    """
    if spec.d < 1:
        raise WindowSizeError("the recurrence references r_{n-2}; d must be >= 1")
    if len(window) != spec.d + 1:
        raise WindowSizeError(f"window must hold {spec.d + 1} polynomials, got {len(window)}")
    coeffs = spec.step_coeffs(n)
    newest = window[0]
    result = coeffs.g * newest**spec.m
    for term in coeffs.t_terms:
        if term.poly.is_zero():
            continue
        monomial = Poly.one(spec.descriptor)
        for r, a in zip(window, term.alpha):
            if a:
                monomial = monomial * r**a
        result = result + term.poly * monomial * newest
    trailing = (window[1] ** spec.m).scale(coeffs.v).shift(spec.l)
    return result + trailing


def generate(
    spec: RecurrenceSpec,
    upto: int,
    *,
    allow_zero_v: bool = False,
    skip_validation: bool = False,
) -> list[Poly]:
    """Produce [r_0, ..., r_upto]; requires upto >= d.

    Validates the instance first (ValidationFailedError carries the
    report) and asserts every generated degree against the closed-form
    degree (DegreeMismatchError).
    """
    from .closedform import degree_formula  # deferred: closedform imports this module

    if upto < spec.d:
        raise ValueError(f"need upto >= d = {spec.d}, got {upto}")
    if not skip_validation:
        report = validate(spec, upto, allow_zero_v=allow_zero_v)
        if not report.ok:
            raise ValidationFailedError(report)
    seq = list(spec.initials)
    for n in range(spec.d + 1, upto + 1):
        window = seq[-1 : -spec.d - 2 : -1]
        r_n = step(spec, window, n)
        expected = degree_formula(spec, n)
        if r_n.degree() != expected:
            raise DegreeMismatchError(n, expected, r_n.degree())
        seq.append(r_n)
    return seq


# ---------------------------------------------------------------------------
# Preset constructors: classical shapes expressed as the general instance.
# ---------------------------------------------------------------------------


def _common_descriptor(scalars: Sequence[Scalar]) -> FieldDescriptor:
    if not scalars:
        raise InvalidParamsError("empty coefficient sequence")
    desc = scalars[0].descriptor
    if any(s.descriptor != desc for s in scalars):
        raise InvalidParamsError("coefficients from mixed fields")
    return desc


def schur_recurrence(a: Sequence[Scalar], b: Sequence[Scalar], c: Sequence[Scalar]) -> RecurrenceSpec:
    """Three-term recurrence r_n = (a_n x + b_n) r_{n-1} - c_n r_{n-2}.

    ``a[i]``, ``b[i]``, ``c[i]`` are the coefficients a_{i+1}, b_{i+1},
    c_{i+1} (so a[0] = a_1 builds r_1 = a_1 x + b_1, and c[0] = c_1 is
    unused; it only keeps the indexing aligned).  Requires a_n c_n != 0.
    The result is the general instance with d=1, m=1, k=1, l=0,
    g_n = a_n x + b_n, v_n = -c_n and no t-terms, starting from
    r_0 = 1.
    """
    if len(a) != len(b) or len(a) != len(c):
        raise InvalidParamsError("a, b, c must have equal length")
    if len(a) < 2:
        raise InvalidParamsError("need coefficients at least up to n = 2")
    desc = _common_descriptor(list(a) + list(b) + list(c))
    if any(x.is_zero() for x in a) or any(x.is_zero() for x in c[1:]):
        raise InvalidParamsError("Schur coefficients require a_n c_n != 0")
    r0 = Poly.one(desc)
    r1 = Poly(desc, [b[0], a[0]])
    steps = {
        n: StepCoeffs(g=Poly(desc, [b[n - 1], a[n - 1]]), v=-c[n - 1])
        for n in range(2, len(a) + 1)
    }
    return RecurrenceSpec(
        descriptor=desc, d=1, m=1, k=1, l=0,
        degrees=(0, 1), initials=(r0, r1), steps=steps, name="schur",
    )


def linear_recurrence(
    initial0: Poly,
    initial1: Poly,
    f: Sequence[Poly],
    v: Sequence[Scalar],
    l: int,
) -> RecurrenceSpec:
    """General linear case r_n = f_n r_{n-1} - v_n x^l r_{n-2}.

    Initial degrees i = deg(initial0) <= j = deg(initial1) and all f_n
    of one degree k >= l are required.  ``f[idx]`` and ``v[idx]`` are
    the step-(idx+2) coefficients.  The result is the general instance
    with d=1, m=1, g_n = f_n and v_n negated.
    """
    if initial0.is_zero() or initial1.is_zero():
        raise InvalidParamsError("initial polynomials must be nonzero")
    if len(f) != len(v) or not f:
        raise InvalidParamsError("need equally many f_n and v_n, at least one each")
    desc = initial0.descriptor
    if initial1.descriptor != desc or any(p.descriptor != desc for p in f) or any(s.descriptor != desc for s in v):
        raise InvalidParamsError("mixed fields")
    i, j = initial0.degree(), initial1.degree()
    if i > j:
        raise InvalidParamsError(f"need deg(initial0) <= deg(initial1), got {i} > {j}")
    k = f[0].degree()
    if any(p.degree() != k for p in f):
        raise InvalidParamsError("all f_n must share one degree k")
    if not 0 <= l <= k:
        raise InvalidParamsError(f"need 0 <= l <= k = {k}, got l = {l}")
    steps = {n: StepCoeffs(g=f[n - 2], v=-v[n - 2]) for n in range(2, len(f) + 2)}
    return RecurrenceSpec(
        descriptor=desc, d=1, m=1, k=k, l=l,
        degrees=(i, j), initials=(initial0, initial1), steps=steps, name="linear",
    )


def order_two_recurrence(
    initial0: Poly,
    initial1: Poly,
    t_tables: Sequence[Sequence[Poly]],
) -> RecurrenceSpec:
    """Order-two shape r_n = sum_{s=0}^m t_{s,n} r_{n-1}^{m-s} r_{n-2}^s.

    ``t_tables[idx]`` lists (t_{0,n}, ..., t_{m,n}) for n = idx+2.
    Required shape: t_{0,n} of one degree k with nonzero lc (this is
    g_n); t_{m,n} a single monomial v_n x^l with one l across steps;
    each middle t_{s,n} with t(0) = 0 and degree < k.  Every middle
    term maps to the general t-term with alpha = (m-s-1, s), because
    r_{n-1}^{m-s} r_{n-2}^s = (r_{n-1}^{m-s-1} r_{n-2}^s) * r_{n-1}.
    For m = 1 the t-term set comes out empty.
    """
    if initial0.is_zero() or initial1.is_zero():
        raise InvalidParamsError("initial polynomials must be nonzero")
    desc = initial0.descriptor
    if initial1.descriptor != desc:
        raise InvalidParamsError("mixed fields")
    if not t_tables:
        raise InvalidParamsError("need at least one step table")
    m = len(t_tables[0]) - 1
    if m < 1:
        raise InvalidParamsError("each table needs at least t_0 and t_m")
    k = t_tables[0][0].degree()
    if not isinstance(k, int):
        raise InvalidParamsError("t_{0,n} must be nonzero")
    l: int | None = None
    steps: dict[int, StepCoeffs] = {}
    for idx, table in enumerate(t_tables):
        n = idx + 2
        if len(table) != m + 1:
            raise InvalidParamsError(f"table for n={n} has {len(table)} entries, expected {m + 1}")
        if any(p.descriptor != desc for p in table):
            raise InvalidParamsError("mixed fields")
        g = table[0]
        if g.degree() != k:
            raise InvalidParamsError(f"deg t_{{0,{n}}} = {g.degree()}, expected k = {k}")
        trailing = table[m]
        if trailing.is_zero():
            raise InvalidParamsError(f"t_{{m,{n}}} must be a nonzero monomial v x^l")
        deg_tr = trailing.degree()
        if sum(1 for s in trailing.coeffs if not s.is_zero()) != 1:
            raise InvalidParamsError(f"t_{{m,{n}}} must be a single monomial v x^l")
        if l is None:
            l = deg_tr
            if l > k:
                raise InvalidParamsError(f"need l <= k, got l = {l}, k = {k}")
        elif deg_tr != l:
            raise InvalidParamsError(f"t_{{m,{n}}} has x-power {deg_tr}, earlier steps used {l}")
        t_terms = []
        for s in range(1, m):
            t = table[s]
            if t.is_zero():
                continue
            if not t.coeff_at(0).is_zero() or t.degree() >= k:
                raise InvalidParamsError(f"t_{{{s},{n}}} needs t(0) = 0 and degree < k = {k}")
            t_terms.append(TTerm(alpha=(m - s - 1, s), poly=t))
        steps[n] = StepCoeffs(g=g, v=trailing.coeff_at(l), t_terms=tuple(t_terms))
    return RecurrenceSpec(
        descriptor=desc, d=1, m=m, k=k, l=l,
        degrees=(initial0.degree(), initial1.degree()),
        initials=(initial0, initial1), steps=steps, name="order2",
    )
