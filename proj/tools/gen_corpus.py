#!/usr/bin/env python3
"""Generate tests/data/corpus.json: bivariate integer systems whose complete
solution sets are known exactly (all solutions rational).

Families: grids, products of lines, direction-adversarial line products,
interpolation systems with aligned pairs, parabola cuts, and non-squarefree
variants.  Output is deterministic for a given --seed.
"""

import argparse
import json
import random
from fractions import Fraction
from math import lcm


def mul(p, q):
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c != 0}


def prod(factors):
    out = {(0, 0): 1}
    for f in factors:
        out = mul(out, f)
    return out


def line(a, b, c):
    """a*x + b*y + c."""
    return {k: v for k, v in {(1, 0): a, (0, 1): b, (0, 0): c}.items() if v != 0}


def text(p):
    parts = []
    for (i, j) in sorted(p, key=lambda k: (-(k[0] + k[1]), -k[1], -k[0])):
        c = p[(i, j)]
        mono = []
        if i:
            mono.append("x" if i == 1 else f"x^{i}")
        if j:
            mono.append("y" if j == 1 else f"y^{j}")
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not mono else []) + mono)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def frac(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def degree(p):
    return max(i + j for i, j in p)


def intersect(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    x = Fraction(b1 * c2 - b2 * c1, det)
    y = Fraction(a2 * c1 - a1 * c2, det)
    return (x, y)


def proportional(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    return a1 * b2 == a2 * b1 and a1 * c2 == a2 * c1 and b1 * c2 == b2 * c1


def entry(name, family, P, Q, pts, note=""):
    pts = sorted(set(pts))
    e = {
        "name": name,
        "family": family,
        "P": text(P),
        "Q": text(Q),
        "d": max(degree(P), degree(Q)),
        "N": len(pts),
        "solutions": [[frac(x), frac(y)] for x, y in pts],
    }
    if note:
        e["note"] = note
    return e


def random_line(rng, span):
    while True:
        a, b = rng.randint(-span, span), rng.randint(-span, span)
        if a or b:
            return (a, b, rng.randint(-span, span))


def line_product_system(rng, m, n, span, fixed_p=None):
    """Returns (Plines, Qlines, points) with no shared line, or None."""
    P = list(fixed_p) if fixed_p else []
    while len(P) < m:
        l = random_line(rng, span)
        if not any(proportional(l, k) for k in P):
            P.append(l)
    Q = []
    tries = 0
    while len(Q) < n and tries < 1000:
        tries += 1
        l = random_line(rng, span)
        if not any(proportional(l, k) for k in P + Q):
            Q.append(l)
    if len(Q) < n:
        return None
    pts = {pt for l1 in P for l2 in Q if (pt := intersect(l1, l2)) is not None}
    return P, Q, pts


def grids(out):
    shapes = [([1, 2], [1, 2]), ([0, 3], [-1, 1, 4]), ([-2, 0, 2], [1, 3, 5]),
              ([1, 2], [-5, -1, 0, 1, 7]), ([0, 1, 2, 3], [0, 1, 2, 3]),
              ([-3, -1, 2, 4, 6], [-4, -2, 1, 3, 5]), ([5, 7, 11], [-2, 8, 9, 13])]
    for k, (xs, ys) in enumerate(shapes):
        P = prod([line(1, 0, -x) for x in xs])
        Q = prod([line(0, 1, -y) for y in ys])
        pts = [(Fraction(x), Fraction(y)) for x in xs for y in ys]
        out.append(entry(f"grid_{k}", "grid", P, Q, pts, "x + c*y rejects c in {0, 1} when steps align"))


def line_products(out, rng, count):
    made = 0
    while made < count:
        m, n = rng.randint(2, 5), rng.randint(2, 5)
        span = rng.choice([3, 5, 9])
        r = line_product_system(rng, m, n, span)
        if r is None:
            continue
        Pl, Ql, pts = r
        if not 4 <= len(pts) <= 25:
            continue
        out.append(entry(f"lines_{made}", "line_product", prod([line(*l) for l in Pl]),
                         prod([line(*l) for l in Ql]), pts))
        made += 1


def adversarial_directions(out, rng, count):
    """P holds lines x + k*y = c_k for k = 0..K-1, so each x + k*y is constant
    on at least two solutions and every coefficient below K is rejected."""
    made = 0
    while made < count:
        K = rng.randint(3, 5)
        Pl = [(1, k, -rng.randint(-4, 4)) for k in range(K)]
        if any(proportional(a, b) for i, a in enumerate(Pl) for b in Pl[i + 1:]):
            continue
        n = rng.randint(2, 4)
        r = line_product_system(rng, K, n, 6, fixed_p=Pl)
        if r is None:
            continue
        _, Ql, pts = r
        if not 4 <= len(pts) <= 25:
            continue
        # Each P line must carry two distinct solutions.
        ok = True
        for (a, b, c) in Pl:
            on = [pt for pt in pts if a * pt[0] + b * pt[1] + c == 0]
            ok = ok and len(on) >= 2
        if not ok:
            continue
        out.append(entry(f"aligned_lines_{made}", "aligned_lines", prod([line(*l) for l in Pl]),
                         prod([line(*l) for l in Ql]), pts, f"x + k*y collides for k < {K}"))
        made += 1


def interpolation(out, rng, count):
    """P = prod (x - x_i), Q = D*y - D*L(x) through points built so that
    consecutive pairs satisfy x_1 + c*y_1 = x_2 + c*y_2 for c = 1, 2, ..."""
    made = 0
    while made < count:
        n = rng.randint(4, 7)
        pts = [(rng.randint(-3, 3), rng.randint(-3, 3))]
        c = 1
        while len(pts) < n:
            x0, y0 = rng.choice(pts)
            dy = rng.choice([-2, -1, 1, 2])
            cand = (x0 + c * dy, y0 - dy)
            if all(cand[0] != p[0] for p in pts):
                pts.append(cand)
                c = c % 4 + 1
            elif rng.random() < 0.1:
                c = c % 4 + 1
        xs = [Fraction(p[0]) for p in pts]
        # Lagrange interpolation of y over the x_i.
        coeffs = [Fraction(0)] * n
        for i, (xi, yi) in enumerate(pts):
            basis = [Fraction(1)]
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j == i:
                    continue
                basis = [Fraction(0)] + basis
                for k in range(len(basis) - 1):
                    basis[k] -= xj * basis[k + 1]
                denom *= xi - xj
            for k in range(len(basis)):
                coeffs[k] += Fraction(yi) * basis[k] / denom
        D = lcm(*[q.denominator for q in coeffs]) if coeffs else 1
        Q = {(0, 1): D}
        for k, q in enumerate(coeffs):
            v = -(q * D)
            if v != 0:
                Q[(k, 0)] = int(v)
        P = prod([line(1, 0, -p[0]) for p in pts])
        sol = [(Fraction(x), Fraction(y)) for x, y in pts]
        out.append(entry(f"interp_{made}", "interpolation", P, Q, sol, "aligned pairs for small c"))
        made += 1


def parabola_cuts(out, rng):
    for k, rs in enumerate([[1, 2], [1, 3, 4], [2, 5], [1, 2, 3, 6]]):
        P = {(0, 1): 1, (2, 0): -1}  # y - x^2
        Q = prod([line(0, 1, -r * r) for r in rs])
        pts = [(Fraction(s * r), Fraction(r * r)) for r in rs for s in (1, -1)]
        out.append(entry(f"parabola_{k}", "parabola", P, Q, pts))


def non_squarefree(out, rng, count):
    made = 0
    while made < count:
        r = line_product_system(rng, 2, 3, 5)
        if r is None:
            continue
        Pl, Ql, pts = r
        if not 4 <= len(pts) <= 25:
            continue
        P = prod([line(*Pl[0]), line(*Pl[0]), line(*Pl[1])])
        Q = prod([line(*l) for l in Ql] + [line(*Ql[-1])])
        out.append(entry(f"nonsquarefree_{made}", "non_squarefree", P, Q, pts, "repeated factors"))
        made += 1


def wide_coefficients(out, rng, count):
    made = 0
    while made < count:
        r = line_product_system(rng, 2, 2, 10 ** 6)
        if r is None:
            continue
        Pl, Ql, pts = r
        if len(pts) != 4:
            continue
        out.append(entry(f"wide_{made}", "wide_coefficients", prod([line(*l) for l in Pl]),
                         prod([line(*l) for l in Ql]), pts))
        made += 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=2014)
    ap.add_argument("-o", "--output", default="tests/data/corpus.json")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    systems = []
    grids(systems)
    line_products(systems, rng, 14)
    adversarial_directions(systems, rng, 7)
    interpolation(systems, rng, 8)
    parabola_cuts(systems, rng)
    non_squarefree(systems, rng, 3)
    wide_coefficients(systems, rng, 2)
    for s in systems:
        assert 4 <= s["N"] <= 25, s["name"]
    with open(args.output, "w") as f:
        json.dump({"seed": args.seed, "systems": systems}, f, indent=1)
        f.write("\n")
    print(f"wrote {len(systems)} systems to {args.output}")


if __name__ == "__main__":
    main()
