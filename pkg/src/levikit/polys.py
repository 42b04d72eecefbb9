"""Minimal polynomials of matrices and rational factorization (via sympy)."""

from __future__ import annotations

import sympy
from gmpy2 import mpq

from .exactmat import ONE, EchelonBasis, Matrix, solve

_x = sympy.Symbol("x")


def minimal_polynomial(m: Matrix) -> list:
    """Monic minimal polynomial as coefficients ``[c_0, ..., c_d]`` (c_d = 1)."""
    n = m.nrows
    powers = [Matrix.identity(n)]
    ech = EchelonBasis(n * n)
    ech.add(powers[0].flatten())
    while True:
        nxt = powers[-1] @ m
        if ech.add(nxt.flatten()) is None:
            # nxt is a combination of the previous powers
            A = Matrix.from_columns([p.flatten() for p in powers], n * n)
            sol = solve(A, nxt.flatten())
            return [-c for c in sol.x] + [ONE]
        powers.append(nxt)


def _to_sympy(coeffs) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(coeffs)],
                      _x, domain="QQ")


def _from_sympy(p: sympy.Poly) -> list:
    cs = p.all_coeffs()
    return [mpq(int(c.p), int(c.q)) for c in reversed(cs)]


def factor_rational(coeffs) -> list[tuple[list, int]]:
    """Monic irreducible factors over Q with multiplicities."""
    p = _to_sympy(coeffs)
    _, facs = p.factor_list()
    out = []
    for f, e in facs:
        f = f.monic()
        out.append((_from_sympy(f), e))
    out.sort(key=lambda fe: (len(fe[0]), [(x.numerator, x.denominator) for x in fe[0]]))
    return out


def poly_eval(coeffs, m: Matrix) -> Matrix:
    """Horner evaluation at a square matrix."""
    n = m.nrows
    out = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in reversed(coeffs):
        out = out @ m + ident * c
    return out


def idempotent_polynomials(minpoly) -> list[list]:
    """For a squarefree minimal polynomial ``p_1 ... p_s``, polynomials ``u_j``
    with ``u_j = 1 mod p_j`` and ``u_j = 0 mod p_k`` (k != j)."""
    p = _to_sympy(minpoly)
    factors = [f for f, _ in p.factor_list()[1]]
    out = []
    for f in factors:
        rest = sympy.Poly(sympy.div(p, f)[0], _x, domain="QQ")
        inv = sympy.invert(rest.as_expr(), f.as_expr(), _x)
        u = sympy.Poly(sympy.expand(rest.as_expr() * inv), _x, domain="QQ").rem(p)
        out.append(_from_sympy(u))
    return out


def is_squarefree(coeffs) -> bool:
    return all(e == 1 for _, e in factor_rational(coeffs))
