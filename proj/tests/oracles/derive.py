"""Independent derivations of the computed reference values.

Plain Python integers, fractions and sympy; nothing here calls the C++ code.
  python3 derive.py --write frozen.json   regenerate
  python3 derive.py --check frozen.json   exit 1 when a value drifted
"""
import argparse
import itertools
import json
import sys
from fractions import Fraction

import sympy as sp


# --- lattices of blowups of P2: vectors (d; m_1..m_n), form diag(1,-1,...,-1), K = (-3; -1,...,-1)


def classes(n, self_int, k_int, dmax=3):
    # bounded brute force: for n <= 6 every (-1)-class has d <= 2 and -1 <= m_i <= d
    out = []
    for d in range(0, dmax + 1):
        for ms in itertools.product(range(-1, d + 2), repeat=n):
            if d * d - sum(m * m for m in ms) == self_int and -3 * d + sum(ms) == k_int:
                out.append((d,) + ms)
    return out


def roots(n):
    # d^2 - sum m^2 = -2, 3d = sum m; includes negatives of d >= 0 roots
    out = set()
    for d in range(0, 4):
        for ms in itertools.product(range(-3, 4), repeat=n):
            if d * d - sum(m * m for m in ms) == -2 and 3 * d == sum(ms):
                out.add((d,) + ms)
                out.add(tuple(-x for x in (d,) + ms))
    return sorted(out)


def line_counts():
    res = {}
    for n in range(2, 7):  # degree 9 - n
        res[str(9 - n)] = len(classes(n, -1, -1, dmax=3))
    return res


def root_counts():
    return {str(9 - n): len(roots(n)) for n in range(2, 7)}


def dp4_valency():
    ls = classes(5, -1, -1, dmax=3)
    val = set()
    for a in ls:
        val.add(sum(1 for b in ls if a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:])) == 1))
    return sorted(val)


def weyl_order(n):
    # reflections in the simple roots E_i - E_{i+1} and L - E_1 - E_2 - E_3 (n >= 3)
    dim = n + 1
    simple = []
    for i in range(1, n):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        simple.append(v)
    if n >= 3:
        simple.append([1, -1, -1, -1] + [0] * (n - 3))
    g = [1] + [-1] * n

    def refl(r):
        # x -> x + (x.r) r, since r.r = -2
        return tuple(
            tuple((1 if i == j else 0) + g[j] * r[j] * r[i] for j in range(dim)) for i in range(dim)
        )

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(dim)) for j in range(dim)) for i in range(dim))

    gens = [refl(r) for r in simple]
    ident = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = mul(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


# --- Hirzebruch-Jung


def hj(m, q):
    chain = []
    a = Fraction(m, q)
    while True:
        c = -(-a.numerator // a.denominator)  # ceil
        chain.append(c)
        if a == c:
            break
        a = 1 / (c - a)
    k = len(chain)
    M = sp.zeros(k, k)
    for i, c in enumerate(chain):
        M[i, i] = -c
        if i + 1 < k:
            M[i, i + 1] = M[i + 1, i] = 1
    # adjunction on each E_i: (K_res).E_i = c_i - 2 with K_res = pi^*K + sum d_j E_j
    rhs = sp.Matrix([c - 2 for c in chain])
    d = M.LUsolve(rhs)
    dk2 = sum(d[i] * rhs[i] for i in range(k))
    inv = M.inv()
    # strict transform of a curve through the point meeting E_1 (resp. E_k) once
    dc2, dd2 = inv[0, 0], inv[k - 1, k - 1]
    return {"m": m, "q": q, "chain": chain, "delta_K2": str(sp.nsimplify(dk2)),
            "delta_C2": str(sp.nsimplify(dc2)), "delta_D2": str(sp.nsimplify(dd2))}


def table1():
    rows = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4)]
    return [hj(m, q) for m, q in rows]


# --- S5 subgroups


def s5_subgroups():
    perms = list(itertools.permutations(range(5)))

    def mul(a, b):
        return tuple(a[b[i]] for i in range(5))

    def close(gens):
        e = tuple(range(5))
        s = {e}
        todo = [e]
        while todo:
            x = todo.pop()
            for g in gens:
                y = mul(g, x)
                if y not in s:
                    s.add(y)
                    todo.append(y)
        return frozenset(s)

    subs = {close([a, b]) for a in perms for b in perms}

    def inv(a):
        r = [0] * 5
        for i, x in enumerate(a):
            r[x] = i
        return tuple(r)

    classes_ = set()
    for h in subs:
        classes_.add(min(tuple(sorted(mul(mul(w, x), inv(w)) for x in h)) for w in perms))
    return {"subgroups": len(subs), "classes": len(classes_)}


# --- Cremona map g = ((y - x) z, (z - x) y, y z)


def cremona():
    x, y, z = sp.symbols("x y z")

    def g(p):
        P, Q, R = p
        return (sp.expand((Q - P) * R), sp.expand((R - P) * Q), sp.expand(Q * R))

    f = (x, y, z)
    orders = []
    for k in range(1, 6):
        f = g(f)
        c = sp.cancel(f[0] / x)
        if sp.simplify(f[1] - c * y) == 0 and sp.simplify(f[2] - c * z) == 0:
            orders.append(k)
    deg5 = sp.Poly(f[0], x, y, z).total_degree()
    s5 = sp.sqrt(5)
    pts = {"p1": (s5 - 1, 2, s5 + 1), "p2": (s5 + 1, -2, s5 - 1)}
    out = {"identity_at": orders, "degree_of_g5": deg5, "points": {}}
    G = g((x, y, z))
    u = [sp.cancel(G[0] / G[2]), sp.cancel(G[1] / G[2])]
    for name, p in pts.items():
        img = [sp.simplify(c.subs({x: p[0], y: p[1], z: p[2]})) for c in G]
        fixed = all(sp.simplify(img[i] * p[j] - img[j] * p[i]) == 0 for i in range(3) for j in range(3))
        X, Y = sp.symbols("X Y")
        uu = [e.subs({x: X, y: Y, z: 1}) for e in u]
        J = sp.Matrix([[sp.diff(e, v) for v in (X, Y)] for e in uu]).subs({X: p[0] / p[2], Y: p[1] / p[2]})
        J = J.applyfunc(sp.radsimp)
        tr = sp.nsimplify(sp.radsimp(J.trace()))
        det = sp.nsimplify(sp.radsimp(J.det()))
        J2 = (J * J).applyfunc(sp.radsimp)
        out["points"][name] = {
            "fixed": bool(fixed),
            "trace": str(sp.radsimp(tr)),
            "det": str(det),
            "trace_squared_map": str(sp.nsimplify(sp.radsimp(J2.trace()))),
            "matches_stated": bool(sp.simplify(tr - (s5 - 1) / 2) == 0 and sp.simplify(det - 1) == 0),
        }
    return out


# --- fixed points of coordinate sign flips on diagonal quartics


FORMS = {
    "dp4i12exconst": [[1, 0, 1, -1, -1], [0, -1, 2, -1, -4]],
    "dp4c2i15ex": [[4, -4, -1, 1, 0], [2, 2, -1, -1, 12]],
    "dp4c2i15ex2": [[4, -4, -3, 3, 0], [2, 2, -3, -3, 36]],
}


def fixed_points(forms, flipped):
    xs = sp.symbols("x1:6")
    pts = set()
    keep = [k for k in range(5) if k + 1 not in flipped]
    for block in (keep, [k for k in range(5) if k + 1 in flipped]):
        if len(block) < 2:
            continue
        sub = {xs[k]: 0 for k in range(5) if k not in block}
        sub[xs[block[-1]]] = 1
        eqs = [sum(c * xs[k] ** 2 for k, c in enumerate(a)).subs(sub) for a in forms]
        free = [xs[k] for k in block[:-1]]
        for sol in sp.solve(eqs, free, dict=True):
            p = [sp.radsimp(sp.sympify(sol.get(xs[k], sub.get(xs[k], 0)))) for k in range(5)]
            pts.add(tuple(str(sp.nsimplify(v)).replace("I", "i") for v in p))
    return sorted(pts)


def all_fixed_points():
    want = {
        "dp4i12exconst": ["i12", "i13", "i23", "i14", "i24"],
        "dp4c2i15ex": ["i12"],
        "dp4c2i15ex2": ["i12"],
    }
    out = {}
    for sid, words in want.items():
        out[sid] = {w: fixed_points(FORMS[sid], [int(c) for c in w[1:]]) for w in words}
    return out


def hurwitz():
    # degree-4: (K - L + E5)^2 / 2; degree 5: (10K)^2 / 60; degree 8: K^2 / 60
    def form(a, b):
        return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))

    K4 = [-3, -1, -1, -1, -1, -1]
    D = [K4[0] - 1] + K4[1:5] + [K4[5] + 1]
    return {
        "dp4_c2": str(Fraction(form(D, D), 2)),
        "dp5_a5": str(Fraction(100 * 5, 60)),
        "dp8_a5": str(Fraction(8, 60)),
        "a5_diag_chain": str(Fraction(2, 15) - Fraction(1, 3) - Fraction(9, 5)),
        "a5_twisted_chain": str(Fraction(2, 15) - Fraction(1, 3) - Fraction(4, 5)),
    }


def derive():
    return {
        "line_counts": line_counts(),
        "root_counts": root_counts(),
        "dp4_valency": dp4_valency(),
        "weyl_orders": {str(9 - n): weyl_order(n) for n in (3, 4, 5)},
        "table1": table1(),
        "s5": s5_subgroups(),
        "cremona": cremona(),
        "fixed_points": all_fixed_points(),
        "hurwitz": hurwitz(),
    }


def main():
    ap = argparse.ArgumentParser()
    g = ap.add_mutually_exclusive_group(required=True)
    g.add_argument("--write")
    g.add_argument("--check")
    a = ap.parse_args()
    got = derive()
    if a.write:
        with open(a.write, "w") as f:
            json.dump(got, f, indent=1, sort_keys=True)
            f.write("\n")
        return 0
    with open(a.check) as f:
        want = json.load(f)
    bad = [k for k in set(want) | set(got) if want.get(k) != json.loads(json.dumps(got.get(k)))]
    for k in sorted(bad):
        print("drift in", k, file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
