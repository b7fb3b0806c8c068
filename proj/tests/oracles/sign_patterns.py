"""Which sign patterns of the two-point line parametrizations lie on each surface.

Independent of the C++ field code: plain sympy radicals. Prints JSON consumed when
writing data/surfaces/*.json.
"""
import itertools
import json

import sympy as sp

I, r2, r3 = sp.I, sp.sqrt(2), sp.sqrt(3)
al = r2 + r3
SURFACES = {
    "dp4i12exconst": (
        [[1, 0, 1, -1, -1], [0, -1, 2, -1, -4]],
        [al, I * (1 + sp.sqrt(6)), 1, al, 1],
        [1, I * (2 * r2 + r3), -al, -1, al],
    ),
    "dp4c2i15ex": (
        [[4, -4, -1, 1, 0], [2, 2, -1, -1, 12]],
        [1, 1, r2, r2, 0],
        [1, -1, 2 * r2, -2 * r2, 1],
    ),
    "dp4c2i15ex2": (
        [[4, -4, -3, 3, 0], [2, 2, -3, -3, 36]],
        [r3, r3, r2, r2, 0],
        [r3, -r3, 2 * r2, -2 * r2, 1],
    ),
}


def on_surface(forms, p, q):
    for a in forms:
        for u, v in ((p, p), (q, q), (p, q)):
            if sp.simplify(sp.expand(sum(c * x * y for c, x, y in zip(a, u, v)))) != 0:
                return False
    return True


def main():
    out = {}
    for name, (forms, p, q) in SURFACES.items():
        good = []
        for s in itertools.product([1, -1], repeat=5):
            if s[0] != 1:
                continue
            if on_surface(forms, [x * e for x, e in zip(p, s)], [x * e for x, e in zip(q, s)]):
                good.append(list(s))
        out[name] = good
    print(json.dumps(out))


if __name__ == "__main__":
    main()
