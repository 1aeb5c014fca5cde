"""Rigid point from the sextic, checked against the simplified resultants; T8 list from level spectra."""
import sympy as sp
import mpmath as mp
from lambda_oracle import coeffs, remainders, x
from resultant_oracle import A1, A2, B3, L, r, simplify

mp.mp.dps = 50
X = sp.symbols("xi")
sextic = X**6 - 3*X**5 - 11*X**4 + 24*X**3 - 6*X**2 - 48*X + 16
vals = {
    "alpha1": (X**5 - 4*X**4 - 16*X**3 + 49*X**2 + 44*X - 74) / 90,
    "alpha2": (-3*X**5 + 10*X**4 + 30*X**3 - 73*X**2 + 24*X + 14) / 30,
    "beta3": (-X**5 + X**4 + 25*X**3 - 22*X**2 - 134*X + 92) / 60,
    "l37": (-5*X**5 + 19*X**4 + 35*X**3 - 124*X**2 + 182*X - 124) / 60,
    "l48": (-2*X**5 - X**4 + 41*X**3 + 37*X**2 - 124*X - 86) / 90,
    "l49": (-2*X**5 + 9*X**4 + 11*X**3 - 69*X**2 + 80*X - 42) / 30,
}
print("sextic irreducible:", sp.Poly(sextic, X).is_irreducible)
xi = sp.nsolve(sextic, X, 0.335, prec=40)
print("xi =", xi)
for k, v in vals.items():
    print(k, sp.N(v.subs(X, xi), 15))


def red(e):
    return sp.rem(sp.Poly(sp.expand(e), X), sp.Poly(sextic, X)).as_expr()


sub = {A1: vals["alpha1"], A2: vals["alpha2"], B3: vals["beta3"]}
for a, b in [(3, 7), (4, 8), (4, 9)]:
    res = sp.resultant(r[a].as_expr(), r[b].as_expr(), x)
    c, rem, kept = simplify(res)
    f = kept[0][0]
    print("r'%d%d" % (a, b), "=", sp.expand(f) if b < 9 else "(deg 11)")
    print("   at xi reduces to", red(sp.together(f.subs(sub)).as_numer_denom()[0]) if False else red(sp.expand(f.subs(sub))))
# coincidences: r_a(lambda) = r_b(lambda) = 0
for name, (a, b) in {"l37": (3, 7), "l48": (4, 8), "l49": (4, 9)}.items():
    for k in (a, b):
        e = r[k].as_expr().subs(x, vals[name]).subs(sub)
        print(name, "r_%d ->" % k, red(sp.expand(e)))

# T8 ordered list from level spectra at the rigid point
lam = [float(sp.N(vals[k].subs(X, xi), 30)) for k in ("alpha1", "alpha2")]
Lnum = [mp.mpf(str(sp.N(vals["alpha1"].subs(X, xi), 40))), mp.mpf(str(sp.N(vals["alpha2"].subs(X, xi), 40))), mp.mpf(-1),
        mp.mpf(str(sp.N(vals["beta3"].subs(X, xi), 40))), mp.mpf(1)]
a, b = coeffs(Lnum, 9)
ell = [2187, 1458, 486, 162, 54, 18, 6, 2, 1]
pts = []
for i in range(1, 10):
    M = mp.matrix(i, i)
    # trailing i x i: diag (a_i .. a_1), super (b_i .. b_2), sub 1
    for r_ in range(i):
        M[r_, r_] = a[i - r_]
        if r_ + 1 < i:
            M[r_, r_ + 1] = b[i - r_]
            M[r_ + 1, r_] = 1
    ev = mp.eig(M)[0]
    for e in ev:
        pts.append((float(mp.re(e)), i))
pts.sort()
groups = []
for v, i in pts:
    if groups and abs(v - groups[-1][0]) < 1e-9:
        groups[-1][1].append(i)
    else:
        groups.append((v, [i]))
lst = [sum(ell[i - 1] for i in g) for _, g in groups]
print("T8 list", lst, sum(lst), len(lst))
for v, g in groups:
    if len(g) > 1:
        print("  coincidence %.9f levels %s mult %d" % (v, g, sum(ell[i - 1] for i in g)))
