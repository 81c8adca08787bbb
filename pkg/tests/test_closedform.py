import random

import pytest

from recres import (
    FormulaContext,
    Poly,
    RecurrenceSpec,
    Scalar,
    StepCoeffs,
    ValidationFailedError,
    ZeroCoefficientError,
    degree_formula,
    exponents,
    generate,
    order_two_formula,
    order_two_recurrence,
    prime_field,
    rationals,
    resultant_euclid,
    resultant_sylvester,
    schur_formula,
    schur_recurrence,
    step,
    step_sign_exponent,
)
from helpers import rand_instance, rand_poly, rand_scalar

Q = rationals()
FP = prime_field(10007)


def ones(desc, count):
    return [Scalar(desc, 1)] * count


def simple_schur(desc=Q, count=10):
    return schur_recurrence(ones(desc, count), [Scalar(desc, 0)] * count, ones(desc, count))


def cubic_m2(desc=Q, n_max=6):
    steps = {n: StepCoeffs(g=Poly.x(desc), v=Scalar(desc, 1)) for n in range(2, n_max + 1)}
    return RecurrenceSpec(
        descriptor=desc, d=1, m=2, k=1, l=0,
        degrees=(0, 1), initials=(Poly.one(desc), Poly.x(desc)), steps=steps,
    )


# -- degree and exponent formulas ---------------------------------------------


def test_degree_formula_examples():
    schur = simple_schur()
    assert degree_formula(schur, 3) == 3
    assert degree_formula(cubic_m2(), 2) == 3
    assert degree_formula(schur, 1) == 1  # n = d gives i_d
    assert degree_formula(schur, 0) == 0


def test_degree_formula_matches_generated_degrees():
    rng = random.Random(100)
    for desc in (FP, Q):
        for _ in range(8):
            spec, n_max = rand_instance(rng, desc)
            for n, r in enumerate(generate(spec, n_max)):
                assert r.degree() == degree_formula(spec, n)


def test_exponents_examples():
    schur = simple_schur()
    assert exponents(schur, 2) == (2, 2)
    assert exponents(schur, 3) == (2, 6)
    assert exponents(cubic_m2(), 2) == (3, 3)
    with pytest.raises(ValueError):
        exponents(schur, 1)


def test_exponents_match_their_definition():
    # gamma(n) = deg r_n - deg(v_n x^l r_{n-2}^m), e(n) = deg r_n * deg r_{n-1}
    rng = random.Random(101)
    for _ in range(8):
        spec, n_max = rand_instance(rng, FP)
        seq = generate(spec, n_max)
        for n in range(spec.d + 1, n_max + 1):
            gamma, e = exponents(spec, n)
            assert gamma == seq[n].degree() - (spec.l + spec.m * seq[n - 2].degree())
            assert e == seq[n].degree() * seq[n - 1].degree()
            assert step_sign_exponent(spec, n) == e + spec.l * seq[n - 1].degree()


# -- leading and constant terms -------------------------------------------------


def test_leading_term_examples():
    ctx = FormulaContext(simple_schur())
    assert ctx.leading_term(3) == Scalar(Q, 1)
    ctx2 = FormulaContext(cubic_m2())
    assert ctx2.leading_term(2) == Scalar(Q, 1)


def test_leading_term_edge_branch():
    # i_0 = i_1 and k = l: the base case becomes a_{k,2} q^m + v_2 p^m
    desc = Q
    spec = RecurrenceSpec(
        descriptor=desc, d=1, m=1, k=0, l=0,
        degrees=(1, 1), initials=(Poly.x(desc), Poly.x(desc)),
        steps={2: StepCoeffs(g=Poly(desc, [2]), v=Scalar(desc, 3))},
    )
    ctx = FormulaContext(spec)
    assert ctx.leading_term(2) == Scalar(desc, 5)
    # cross-check against one raw step (the instance is otherwise degenerate)
    r2 = step(spec, [Poly.x(desc), Poly.x(desc)], 2)
    assert r2 == Poly(desc, [0, 5])
    assert ctx.leading_term(1) == Scalar(desc, 1)


def test_leading_term_matches_generated(subtests=None):
    rng = random.Random(102)
    for desc in (FP, Q):
        for _ in range(8):
            spec, n_max = rand_instance(rng, desc)
            seq = generate(spec, n_max)
            ctx = FormulaContext(spec)
            for n in range(spec.d, n_max + 1):
                assert ctx.leading_term(n) == seq[n].leading_coeff(), (spec.d, spec.m, spec.k, spec.l, n)


def shifted_l1_instance(n_max=5):
    # d=1, m=1, k=1, l=1: r_n = (x+3) r_{n-1} + x r_{n-2}, from (1, x^2+2)
    desc = Q
    steps = {n: StepCoeffs(g=Poly(desc, [3, 1]), v=Scalar(desc, 1)) for n in range(2, n_max + 1)}
    return RecurrenceSpec(
        descriptor=desc, d=1, m=1, k=1, l=1,
        degrees=(0, 2), initials=(Poly.one(desc), Poly(desc, [2, 0, 1])), steps=steps,
    )


def test_constant_term_positive_l():
    spec = shifted_l1_instance()
    ctx = FormulaContext(spec)
    # closed product: 2 * 3 * 3 at n = 3; the true r_3(0)
    assert ctx.constant_term(3) == Scalar(Q, 18)
    assert ctx.constant_value(3) == Scalar(Q, 18)
    seq = generate(spec, 3)
    assert seq[3].evaluate(Scalar(Q, 0)) == Scalar(Q, 18)


def test_constant_term_l_zero_is_one():
    ctx = FormulaContext(simple_schur())
    assert ctx.constant_term(5) == Scalar(Q, 1)


def test_constant_value_recurrence():
    # a_{0,2} C_1 + v_2 C_0 = 0*0 + (-1)*1 = -1, matching (x^2 - 1)(0)
    ctx = FormulaContext(simple_schur())
    assert ctx.constant_value(2) == Scalar(Q, -1)
    assert ctx.constant_value(0) == Scalar(Q, 1)
    assert ctx.constant_value(1) == Scalar(Q, 0)


def test_constant_value_matches_generated():
    rng = random.Random(103)
    for desc in (FP, Q):
        for _ in range(8):
            spec, n_max = rand_instance(rng, desc)
            seq = generate(spec, n_max)
            ctx = FormulaContext(spec)
            origin = Scalar(desc, 0)
            for n in range(n_max + 1):
                assert ctx.constant_value(n) == seq[n].evaluate(origin)
                if spec.l > 0 and n >= spec.d:
                    assert ctx.constant_term(n) == seq[n].evaluate(origin)


# -- the resultant formula -------------------------------------------------------


def test_resultant_formula_examples():
    schur = simple_schur()
    ctx = FormulaContext(schur)
    seq = generate(schur, 3)
    assert ctx.resultant_formula(2) == resultant_sylvester(seq[2], seq[1]) == Scalar(Q, -1)
    assert ctx.resultant_formula(3) == resultant_sylvester(seq[3], seq[2]) == Scalar(Q, -1)
    m2 = cubic_m2()
    ctx2 = FormulaContext(m2)
    seq2 = generate(m2, 2)
    assert ctx2.resultant_formula(2) == resultant_sylvester(seq2[2], seq2[1]) == Scalar(Q, -1)


def test_resultant_formula_sign_with_odd_l_and_degree():
    # l = 1, deg r_1 = 1: dropping the (-1)^(l * deg) factor would give +1 here
    desc = Q
    spec = RecurrenceSpec(
        descriptor=desc, d=1, m=1, k=1, l=1,
        degrees=(0, 1), initials=(Poly.one(desc), Poly(desc, [1, 1])),
        steps={2: StepCoeffs(g=Poly.x(desc), v=Scalar(desc, 1))},
    )
    seq = generate(spec, 2)
    assert seq[2] == Poly(desc, [0, 2, 1])
    direct = resultant_sylvester(seq[2], seq[1])
    assert direct == Scalar(desc, -1)
    assert FormulaContext(spec).resultant_formula(2) == direct


def test_resultant_formula_positive_l_instance():
    spec = shifted_l1_instance()
    ctx = FormulaContext(spec)
    seq = generate(spec, 5)
    for n in range(2, 6):
        direct = resultant_sylvester(seq[n], seq[n - 1])
        assert ctx.resultant_formula(n) == direct


def test_resultant_formula_validates():
    bad = RecurrenceSpec(
        descriptor=Q, d=1, m=1, k=1, l=0,
        degrees=(0, 1), initials=(Poly.one(Q), Poly.x(Q)),
        steps={2: StepCoeffs(g=Poly.x(Q), v=Scalar(Q, 0))},
    )
    with pytest.raises(ValidationFailedError):
        FormulaContext(bad).resultant_formula(2)
    # the zero-v open case: with the flag, formula and truth are both 0
    relaxed = FormulaContext(bad, allow_zero_v=True)
    seq = generate(bad, 2, allow_zero_v=True)
    assert relaxed.resultant_formula(2).is_zero()
    assert resultant_sylvester(seq[2], seq[1]).is_zero()


def test_resultant_formula_shared_initial_root_gives_zero():
    # initial polynomials with a common root: every R_n must be 0 on both routes
    desc = Q
    r0 = Poly(desc, [-1, 1])            # x - 1
    r1 = Poly(desc, [-1, 0, 1])         # (x - 1)(x + 1)
    steps = {n: StepCoeffs(g=Poly(desc, [1, 1]), v=Scalar(desc, 2)) for n in (2, 3)}
    spec = RecurrenceSpec(
        descriptor=desc, d=1, m=2, k=1, l=1,
        degrees=(1, 2), initials=(r0, r1), steps=steps,
    )
    ctx = FormulaContext(spec)
    seq = generate(spec, 3)
    assert ctx.base_resultant().is_zero()
    for n in (2, 3):
        assert ctx.resultant_formula(n).is_zero()
        assert resultant_sylvester(seq[n], seq[n - 1]).is_zero()


def test_main_identity_random_instances():
    rng = random.Random(104)
    for desc, rounds in ((FP, 20), (Q, 10)):
        for _ in range(rounds):
            spec, n_max = rand_instance(rng, desc)
            seq = generate(spec, n_max)
            ctx = FormulaContext(spec)
            for n in range(spec.d + 1, n_max + 1):
                closed = ctx.resultant_formula(n)
                assert closed == resultant_sylvester(seq[n], seq[n - 1])
                assert closed == resultant_euclid(seq[n], seq[n - 1])


def test_recursive_step_identity():
    # R_n = (-1)^sigma(n) L_{n-1}^gamma(n) v_n^{deg r_{n-1}} C_{n-1}^l R_{n-1}^m
    rng = random.Random(105)
    for desc in (FP, Q):
        for _ in range(6):
            spec, n_max = rand_instance(rng, desc)
            seq = generate(spec, n_max)
            ctx = FormulaContext(spec)
            for n in range(spec.d + 1, n_max + 1):
                r_n = resultant_sylvester(seq[n], seq[n - 1])
                r_prev = resultant_sylvester(seq[n - 1], seq[n - 2])
                gamma, _ = exponents(spec, n)
                rhs = (
                    ctx.leading_term(n - 1) ** gamma
                    * spec.steps[n].v ** seq[n - 1].degree()
                    * ctx.constant_term(n - 1) ** spec.l
                    * r_prev**spec.m
                )
                if step_sign_exponent(spec, n) % 2:
                    rhs = -rhs
                assert r_n == rhs


# -- the classical closed form ----------------------------------------------------


def test_schur_formula_examples():
    a = ones(Q, 8)
    c = ones(Q, 8)
    assert schur_formula(a, c, 2) == Scalar(Q, -1)
    assert schur_formula(a, c, 3) == Scalar(Q, -1)
    assert schur_formula(a, c, 4) == Scalar(Q, 1)


def test_schur_formula_agrees_with_direct_resultant():
    rng = random.Random(106)
    for desc in (Q, FP):
        for _ in range(6):
            a = [rand_scalar(rng, desc, -9, 9, nonzero=True) for _ in range(8)]
            b = [rand_scalar(rng, desc, -9, 9) for _ in range(8)]
            c = [rand_scalar(rng, desc, -9, 9, nonzero=True) for _ in range(8)]
            spec = schur_recurrence(a, b, c)
            seq = generate(spec, 8)
            ctx = FormulaContext(spec)
            for n in range(2, 9):
                value = schur_formula(a, c, n)
                assert value == resultant_sylvester(seq[n], seq[n - 1])
                assert value == ctx.resultant_formula(n)


def test_schur_formula_rejects_zero_coefficients():
    a = ones(Q, 4)
    c = [Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 1)]
    with pytest.raises(ZeroCoefficientError):
        schur_formula(a, c, 3)
    with pytest.raises(ValueError):
        schur_formula(a, ones(Q, 4), 1)


# -- the order-two closed form, independently evaluated ----------------------------


def rand_order_two(rng, desc, max_tries=300):
    for _ in range(max_tries):
        m = rng.randint(1, 3)
        top = 3 if m <= 2 else 2
        k = rng.randint(1, top)
        l = rng.randint(0, k)
        i = rng.randint(0, 2)
        j = rng.randint(i, top)
        # depth capped by m to keep the degrees (~ j * m^(n-1)) desk sized
        n_max = {1: 6, 2: 4, 3: 4}[m]
        initial0 = rand_poly(rng, desc, i, -5, 5)
        initial1 = rand_poly(rng, desc, j, -5, 5)
        tables = []
        for _n in range(2, n_max + 1):
            row = [rand_poly(rng, desc, k, -5, 5)]
            for _s in range(1, m):
                t = Poly(desc, [0] + [rng.randint(-5, 5) for _ in range(k - 1)])
                row.append(t)
            v = rand_scalar(rng, desc, -5, 5, nonzero=True)
            row.append(Poly.monomial(desc, l, v))
            tables.append(row)
        try:
            spec = order_two_recurrence(initial0, initial1, tables)
        except Exception:
            continue
        from recres import validate

        if validate(spec, n_max).ok:
            return initial0, initial1, tables, spec, n_max
    raise RuntimeError("no valid order-two instance found")


def test_order_two_formula_consistency():
    rng = random.Random(107)
    for desc in (FP, Q):
        for _ in range(6):
            initial0, initial1, tables, spec, n_max = rand_order_two(rng, desc)
            seq = generate(spec, n_max)
            ctx = FormulaContext(spec)
            for n in range(2, n_max + 1):
                independent = order_two_formula(initial0, initial1, tables, n)
                assert independent == ctx.resultant_formula(n)
                assert independent == resultant_sylvester(seq[n], seq[n - 1])


def test_edge_branch_identity():
    # i_0 = i_1, k = l instances exercise the alternate leading-term base
    rng = random.Random(108)
    found = 0
    while found < 6:
        spec, n_max = rand_instance(rng, FP, m_max=3)
        if not (spec.degrees[spec.d] == spec.degrees[spec.d - 1] and spec.k == spec.l):
            continue
        found += 1
        seq = generate(spec, n_max)
        ctx = FormulaContext(spec)
        for n in range(spec.d + 1, n_max + 1):
            assert ctx.resultant_formula(n) == resultant_sylvester(seq[n], seq[n - 1])
