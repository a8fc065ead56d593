"""Polynomials over a pluggable exact field, plus complete factorization.

Coefficient lists run low to high.  Factorization is delegated to sympy
(over Q directly, over an extension through its algebraic-field domain)
and every result is re-multiplied in our own arithmetic as a self-check.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .errors import InternalDisagreement
from .linalg import Field
from .scalars import QQ, Ext, ExtensionField


def poly_trim(field: Field, cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def poly_mul(field: Field, a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return poly_trim(field, out)


def poly_divmod(field: Field, a: list, b: list) -> tuple[list, list]:
    rem = poly_trim(field, list(a))
    db, lead = len(b) - 1, b[-1]
    quo = [field.zero] * max(0, len(rem) - db)
    while rem and len(rem) - 1 >= db:
        shift = len(rem) - 1 - db
        c = rem[-1] / lead
        quo[shift] = c
        for i in range(db + 1):
            rem[shift + i] = rem[shift + i] - c * b[i]
        poly_trim(field, rem)
    return poly_trim(field, quo), rem


def poly_xgcd(field: Field, a: list, b: list) -> tuple[list, list, list]:
    """(g, u, v) with u a + v b = g, g monic (or empty)."""
    r0, r1 = poly_trim(field, list(a)), poly_trim(field, list(b))
    u0, u1 = [field.one], []
    v0, v1 = [], [field.one]
    while r1:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        qu1 = poly_mul(field, q, u1)
        qv1 = poly_mul(field, q, v1)
        u0, u1 = u1, poly_trim(field, [x - y for x, y in _pad(field, u0, qu1)])
        v0, v1 = v1, poly_trim(field, [x - y for x, y in _pad(field, v0, qv1)])
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        u0 = [c / lead for c in u0]
        v0 = [c / lead for c in v0]
    return r0, u0, v0


def _pad(field: Field, a: list, b: list):
    n = max(len(a), len(b))
    return zip(list(a) + [field.zero] * (n - len(a)), list(b) + [field.zero] * (n - len(b)))


def poly_eval_in_algebra(field: Field, coeffs: list, mul, unit: tuple, a: tuple) -> tuple:
    """Evaluate p(a) inside an algebra given by a product callback."""
    acc = tuple(field.zero for _ in unit)
    power = unit
    for k, c in enumerate(coeffs):
        if c:
            acc = tuple(x + c * y for x, y in zip(acc, power))
        if k + 1 < len(coeffs):
            power = mul(power, a)
    return acc


_X = sympy.symbols("_blocksys_x")


def _to_sympy_coeff(c) -> sympy.Expr:
    if isinstance(c, Ext):
        raise TypeError("extension coefficients handled separately")
    return sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)


def _factor_over_q(coeffs: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    expr = sum(_to_sympy_coeff(c) * _X ** k for k, c in enumerate(coeffs))
    poly = sympy.Poly(expr, _X, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, mult in factors:
        cs = [Fraction(str(c)) for c in reversed(f.all_coeffs())]
        lead = cs[-1]
        cs = [c / lead for c in cs]
        out.append((cs, int(mult)))
    return out


def _factor_over_ext(field: ExtensionField, coeffs: list) -> list[tuple[list, int]]:
    mod_expr = sum(_to_sympy_coeff(c) * _X ** k for k, c in enumerate(field.modulus))
    n_roots = sympy.degree(mod_expr, _X)
    last_exc: Exception | None = None
    for root_index in range(n_roots):
        try:
            alpha = sympy.CRootOf(mod_expr, root_index)
            expr = sympy.Integer(0)
            for k, c in enumerate(coeffs):
                cf = c if isinstance(c, Ext) else field.coerce(c)
                expr += sum(_to_sympy_coeff(q) * alpha ** t for t, q in enumerate(cf.coeffs)) * _X ** k
            poly = sympy.Poly(expr, _X, extension=alpha)
            _, factors = poly.factor_list()
            out = []
            for f, mult in factors:
                raw = list(reversed(f.all_coeffs()))
                conv = []
                for c in raw:
                    cp = sympy.Poly(sympy.expand(sympy.sympify(c)), alpha)
                    qs = [Fraction(str(q)) for q in reversed(cp.all_coeffs())]
                    conv.append(field.element(qs))
                lead = conv[-1]
                conv = [c / lead for c in conv]
                out.append((conv, int(mult)))
            # self-check: factors must multiply back to the (monic) input
            prod = [field.one]
            for cs, mult in out:
                for _ in range(mult):
                    prod = poly_mul(field, prod, cs)
            monic_in = [field.coerce(c) / field.coerce(coeffs[-1]) for c in coeffs]
            if poly_trim(field, [a - b for a, b in _pad(field, prod, monic_in)]):
                raise InternalDisagreement("factor product mismatch")
            return out
        except Exception as exc:  # try the next embedding
            last_exc = exc
    raise InternalDisagreement(f"extension-field factorization failed: {last_exc}")


def factor_poly(field: Field, coeffs: list) -> list[tuple[list, int]]:
    """Complete factorization into monic irreducibles with multiplicities."""
    cs = poly_trim(field, [field.coerce(c) for c in coeffs])
    if len(cs) <= 1:
        raise ValueError("factor_poly needs degree >= 1")
    if isinstance(field, ExtensionField):
        return _factor_over_ext(field, cs)
    return _factor_over_q([Fraction(c) for c in cs])
