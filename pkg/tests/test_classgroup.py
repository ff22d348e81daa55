import itertools
import math
import random
from fractions import Fraction

import pytest

from besselzeta.classgroup import (
    ClassChar,
    ClassGroup,
    QuadForm,
    bessel_coeff_sum,
    compose_forms,
    is_fundamental,
    reduce_form,
    reduced_forms,
    t_theta,
    t_theta_principal,
)

LISTED = (-3, -4, -7, -8, -11, -15, -20, -23, -47)


def test_reduction_pins():
    f, m = reduce_form(QuadForm(1, 1, 6))
    assert f == QuadForm(1, 1, 6) and m == ((1, 0), (0, 1))
    f, m = reduce_form(QuadForm(6, 1, 1))
    assert f == QuadForm(1, 1, 6)
    assert QuadForm(6, 1, 1).transform(m) == f
    f, m = reduce_form(QuadForm(3, 5, 3))  # D = -11
    assert f == QuadForm(1, 1, 3)
    assert QuadForm(3, 5, 3).transform(m) == f
    assert reduced_forms(-11) == [QuadForm(1, 1, 3)]  # exhaustive table
    with pytest.raises(ValueError):
        reduce_form(QuadForm(-1, 0, 1))


def test_reduction_witness_random():
    rng = random.Random(21)
    for _ in range(200):
        a = rng.randint(1, 30)
        b = rng.randint(-30, 30)
        cmin = (b * b) // (4 * a) + 1
        c = cmin + rng.randint(0, 20)
        f = QuadForm(a, b, c)
        if f.disc >= 0:
            continue
        g, m = reduce_form(f)
        assert g.is_reduced()
        assert f.transform(m) == g
        assert g.disc == f.disc


def test_enumeration_pins():
    assert reduced_forms(-3) == [QuadForm(1, 1, 1)]
    assert reduced_forms(-4) == [QuadForm(1, 0, 1)]
    assert sorted(reduced_forms(-23)) == sorted(
        [QuadForm(1, 1, 6), QuadForm(2, 1, 3), QuadForm(2, -1, 3)]
    )
    assert len(reduced_forms(-47)) == 5


def test_class_numbers_against_oracle():
    for d, h in ((-3, 1), (-4, 1), (-23, 3), (-47, 5)):
        grp = ClassGroup(d)
        assert grp.h == h
        assert len(reduced_forms(d)) == h


def test_fundamental_check():
    assert is_fundamental(-4) and is_fundamental(-23)
    assert not is_fundamental(-12)  # 4 * (-3), -3 = 1 mod 4
    assert not is_fundamental(-9)
    assert not is_fundamental(5)
    with pytest.raises(ValueError):
        ClassGroup(-12)


def test_group_axioms_all_listed():
    for d in LISTED:
        grp = ClassGroup(d)
        cl = grp.classes
        ident = cl[grp.identity]
        for x in cl:
            assert grp.compose(ident, x) == x
            assert grp.compose(x, grp.conjugate_class(x)) == ident
        for x, y, z in itertools.product(cl, repeat=3):
            assert grp.compose(grp.compose(x, y), z) == grp.compose(
                x, grp.compose(y, z)
            )


def test_composition_pins():
    grp = ClassGroup(-23)
    assert grp.compose(QuadForm(2, 1, 3), QuadForm(2, -1, 3)) == QuadForm(1, 1, 6)
    assert grp.compose(QuadForm(2, 1, 3), QuadForm(2, 1, 3)) == QuadForm(2, -1, 3)
    with pytest.raises(ValueError):
        compose_forms(QuadForm(1, 1, 6), QuadForm(1, 0, 1))  # discriminant mismatch


# -- independent ideal-arithmetic oracle -----------------------------------
# the class of (a, b, c) corresponds to the ideal Z a + Z (-b + sqrt(D))/2;
# module arithmetic is done in the basis {1, w} with w = (D + sqrt(D))/2.


def _form_to_module(f):
    d = f.disc
    # (-b + sqrt(D))/2 = (-b - D)/2 + w
    return [(f.a, 0), ((-f.b - d) // 2, 1)], d


def _module_product(gens1, gens2, d):
    # products of generators, expanded in {1, w}: w^2 = D w - (D^2 - D)/4
    w_tr = d
    w_norm = (d * d - d) // 4
    out = []
    for x1, y1 in gens1:
        for x2, y2 in gens2:
            # (x1 + y1 w)(x2 + y2 w)
            const = x1 * x2 - y1 * y2 * w_norm
            lin = x1 * y2 + y1 * x2 + y1 * y2 * w_tr
            out.append((const, lin))
    return out


def _module_hnf(gens):
    # canonical basis [(n, 0), (b, g)] of the Z-module spanned by gens
    gens = [g for g in gens if g != (0, 0)]
    # make a single generator with minimal positive w-coefficient
    while True:
        withw = sorted((g for g in gens if g[1]), key=lambda g: abs(g[1]))
        if len(withw) <= 1:
            break
        lead = withw[0]
        rest = []
        for g in gens:
            if g is lead or not g[1]:
                rest.append(g)
            else:
                k = g[1] // lead[1]
                rest.append((g[0] - k * lead[0], g[1] - k * lead[1]))
        gens = [lead] + [g for g in rest if g != (0, 0) and g is not lead]
        if all(g[1] % lead[1] == 0 or not g[1] for g in gens):
            reduced = []
            for g in gens:
                if g[1] and g is not lead:
                    k = g[1] // lead[1]
                    g = (g[0] - k * lead[0], g[1] - k * lead[1])
                if g != (0, 0):
                    reduced.append(g)
            if all(not g[1] for g in reduced if g is not lead):
                gens = reduced
                break
    lead = next(g for g in gens if g[1])
    if lead[1] < 0:
        lead = (-lead[0], -lead[1])
    n = math.gcd(*[abs(g[0]) for g in gens if not g[1]]) if any(
        not g[1] for g in gens
    ) else 0
    assert n > 0
    return n, (lead[0] % n, lead[1])


def _module_to_form(n, lead, d):
    # norm form of the ideal [n, b + g w] divided by its norm n * g, with
    # the basis oriented so that form -> ideal -> form is the identity
    b, g = lead
    w_tr, w_norm = d, (d * d - d) // 4
    # N(n x - (b + g w) y) = n^2 x^2 - n(2b + g w_tr) x y + N(b + g w) y^2
    nb = b * b + b * g * w_tr + g * g * w_norm
    norm_ideal = n * g
    aa = n * n // norm_ideal
    bb = -n * (2 * b + g * w_tr) // norm_ideal
    cc = nb // norm_ideal
    return reduce_form(QuadForm(aa, bb, cc))[0]


def _ideal_compose(f1, f2):
    gens1, d = _form_to_module(f1)
    gens2, _ = _form_to_module(f2)
    prod = _module_product(gens1, gens2, d)
    n, lead = _module_hnf(prod)
    return _module_to_form(n, lead, d)


def test_ideal_oracle_roundtrip():
    # form -> ideal -> form is the identity on reduced representatives
    for d in LISTED:
        for f in reduced_forms(d):
            gens, _ = _form_to_module(f)
            n, lead = _module_hnf(gens)
            assert _module_to_form(n, lead, d) == f


def test_composition_against_ideal_oracle():
    for d in LISTED:
        grp = ClassGroup(d)
        for f1 in grp.classes:
            for f2 in grp.classes:
                assert grp.compose(f1, f2) == _ideal_compose(f1, f2), (d, f1, f2)


def test_t_theta():
    assert t_theta(-4, 0, 1) == QuadForm(1, 0, 1)
    assert t_theta(-23, 1, 6) == QuadForm(1, 1, 6)
    with pytest.raises(ValueError):
        t_theta(-23, 0, 1)
    # -det of the matrix form is D/4 exactly
    f = t_theta(-20, 0, 5)
    assert -(Fraction(f.a) * f.c - Fraction(f.b, 2) ** 2) == Fraction(-20, 4)
    # principal form generator matches the integer ring
    assert t_theta_principal(-4) == QuadForm(1, 0, 1)
    assert t_theta_principal(-23) == QuadForm(1, 1, 6)


def test_conjugation():
    grp = ClassGroup(-23)
    ident = grp.classes[grp.identity]
    assert grp.conjugate_class(ident) == ident
    assert grp.conjugate_class(QuadForm(2, 1, 3)) == QuadForm(2, -1, 3)
    grp47 = ClassGroup(-47)
    for f in grp47.classes:
        assert grp47.conjugate_class(grp47.conjugate_class(f)) == f
        # conjugation is inversion
        assert grp47.compose(f, grp47.conjugate_class(f)) == grp47.classes[
            grp47.identity
        ]


def test_characters_count_and_orthogonality():
    for d in (-15, -20, -23, -47):
        grp = ClassGroup(d)
        chars = ClassChar.all_chars(grp)
        assert len(chars) == grp.h
        for c1 in chars:
            for c2 in chars:
                s = sum(c1(f) * c2(f).conjugate() for f in grp.classes)
                want = grp.h if c1.exponents == c2.exponents else 0
                assert abs(s - want) < 1e-12
        # columns too
        for f1 in grp.classes:
            for f2 in grp.classes:
                s = sum(c(f1) * c(f2).conjugate() for c in chars)
                want = grp.h if f1 == f2 else 0
                assert abs(s - want) < 1e-12


def test_char_conjugate_is_inverse():
    grp = ClassGroup(-47)
    for chi in ClassChar.all_chars(grp):
        conj = chi.conjugate()
        for f in grp.classes:
            assert abs(conj(f) - chi(f).conjugate()) < 1e-12
            assert abs(conj(f) * chi(f) - chi(grp.classes[grp.identity]) ** 0) < 1e-12


def test_bessel_coeff_sum_orthogonality():
    grp = ClassGroup(-23)
    chars = ClassChar.all_chars(grp)
    ones = {f: 1.0 for f in grp.classes}
    for chi in chars:
        got = bessel_coeff_sum(grp, ones, chi)
        want = grp.h if chi.is_trivial() else 0.0
        assert abs(got - want) < 1e-12
    with pytest.raises(ValueError):
        bessel_coeff_sum(grp, {grp.classes[0]: 1.0}, chars[0])


def test_bessel_conj_sign_law():
    rng = random.Random(17)
    for d in (-23, -47):
        grp = ClassGroup(d)
        chars = ClassChar.all_chars(grp)
        for l2 in (0, 1):
            sign = (-1) ** l2
            for _ in range(100):
                coeffs = {}
                for f in grp.classes:
                    fc = grp.conjugate_class(f)
                    if f in coeffs:
                        continue
                    if fc == f:
                        coeffs[f] = rng.gauss(0, 1) if sign == 1 else 0.0
                    else:
                        v = complex(rng.gauss(0, 1), rng.gauss(0, 1))
                        coeffs[f] = v
                        coeffs[fc] = sign * v
                for chi in chars:
                    lhs = bessel_coeff_sum(grp, coeffs, chi.conjugate())
                    rhs = sign * bessel_coeff_sum(grp, coeffs, chi)
                    assert abs(lhs - rhs) < 1e-10


def test_unit_counts():
    assert ClassGroup(-3).w == 6
    assert ClassGroup(-4).w == 4
    assert ClassGroup(-23).w == 2


def test_structure_labels():
    assert ClassGroup(-3).structure_label() == "C1"
    assert ClassGroup(-23).structure_label() == "C3"
    assert ClassGroup(-47).structure_label() == "C5"
    # first non-cyclic fundamental discriminant
    grp = ClassGroup(-84)
    assert grp.h == 4
    assert grp.structure_label() == "C2 x C2"
    assert len(ClassChar.all_chars(grp)) == 4
