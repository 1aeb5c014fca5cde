"""Independent sympy computations used to freeze expected values in the Rust tests."""
import sympy as sp

x = sp.symbols("x")
a1, a2, b2, b3, b4 = sp.symbols("a1 a2 b2 b3 b4")


def alpha(i, L):
    return L[0] if i % 2 == 1 else L[1]


def beta(i, L):
    return {2: L[2], 0: L[3], 1: L[4]}[i % 3]


def coeffs(L, n):
    A1, A2, B2, B3, B4 = L
    a = {}
    b = {}
    for i in range(1, n + 1):
        a[i] = A1 if i % 2 == 1 else A2
    if n >= 2:
        a[2] = -A1 + A2 + B2
        b[2] = (B2 - A1) * (A1 - A2)
    if n >= 3:
        b[3] = (B3 - A2) * (B3 - B2)
    if n >= 4:
        b[4] = (B4 - A1) * (B3 - B4) * (A2 + B2 - B3 - B4) / (B4 - B2)
    for i in range(5, n + 1):
        bj = beta(i, L)
        b[i] = (bj - A1) * (bj - A2)
    return a, b


def charpolys(L, n):
    a, b = coeffs(L, n)
    p = [sp.Integer(1), x - a[1]]
    for k in range(2, n + 1):
        p.append(sp.expand((x - a[k]) * p[k - 1] - b[k] * p[k - 2]))
    return p


def remainders(L, n):
    p = charpolys(L, n)
    r = {}
    for k in range(3, n + 1):
        q, rem = sp.div(sp.Poly(p[k], x), sp.Poly((x - alpha(k, L)) * (x - beta(k, L)), x))
        assert sp.simplify(rem.as_expr()) == 0, k
        r[k] = sp.Poly(sp.simplify(q.as_expr()), x)
    return r


if __name__ == "__main__":
    # height-three family at x = 2/5 and x = 1/2
    for xv in [sp.Rational(2, 5), sp.Rational(1, 2)]:
        L = [xv, (28 - 30 * xv) / (9 * (4 - 3 * xv)), sp.Rational(1, 3), sp.Rational(1, 9),
             (-27 * xv**2 + 24 * xv + 4) / (9 * (4 - 3 * xv))]
        a, b = coeffs(L, 4)
        print("x=", xv, "L=", L)
        print("  a=", [a[i] for i in range(1, 5)], "b=", [b[i] for i in range(2, 5)])
        r = remainders(L, 4)
        print("  r3 roots", sp.roots(r[3].as_expr(), x), "r4 roots", sp.roots(r[4].as_expr(), x))
        p = charpolys(L, 4)
        for k in range(1, 5):
            print("  sigma C%d" % k, sp.roots(p[k], x))
