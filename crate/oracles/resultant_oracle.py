"""Resultants of remainder polynomials under beta2=-1, beta4=1, factored with sympy."""
import sympy as sp
from lambda_oracle import remainders, x

A1, A2, B3 = sp.symbols("alpha1 alpha2 beta3")
L = [A1, A2, sp.Integer(-1), B3, sp.Integer(1)]
vals = L
trivial = [sp.expand(u - v) for i, u in enumerate(vals) for v in vals[i + 1:]]
trivial = [t for t in trivial if not t.is_number] + [sp.expand(A2 - 1 - B3 - 1)]

r = remainders(L, 9)
for k in r:
    r[k] = sp.Poly(sp.cancel(r[k].as_expr()), x)


def simplify(res):
    res = sp.factor(res)
    const, facs = sp.factor_list(res)
    kept = []
    removed = []
    for f, e in facs:
        if any(sp.simplify(f - t) == 0 or sp.simplify(f + t) == 0 for t in trivial):
            removed.append((f, e))
        else:
            kept.append((f, e))
    return const, removed, kept


if __name__ == "__main__":
    import sys
    pairs = [(3, 5), (3, 6), (3, 7), (4, 6), (4, 7), (4, 5), (4, 8), (4, 9)]
    for a, b in pairs:
        res = sp.resultant(r[a].as_expr(), r[b].as_expr(), x)
        c, rem, kept = simplify(res)
        print((a, b), "const", c, "removed", rem, "kept degrees", [(sp.Poly(f, A1, A2, B3).total_degree(), e) for f, e in kept])
        if b <= 7:
            print("   kept:", kept)
        sys.stdout.flush()
    # companion matrix of r4 with negated coefficients in its first row
    c2, c1, c0 = r[4].all_coeffs()
    assert c2 == 1
    R4 = sp.Matrix([[-c1, -c0], [1, 0]])
    coeffs8 = r[8].all_coeffs()
    M = sp.zeros(2, 2)
    for c in coeffs8:
        M = (M * R4 + c * sp.eye(2)).applyfunc(sp.expand)
    e21 = sp.factor(M[1, 0])
    target = (B3 - 1) * (A1 + 1) * (-1 - A2) * (A1 - 1) * (A2 - 1 - B3 - 1)
    print("r8(R4)[2,1] =", e21)
    print("ratio =", sp.simplify(M[1, 0] / target))
