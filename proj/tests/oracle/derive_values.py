"""Independent brute-force computation of expected values used by the C++ tests.

Run: python3 tests/oracle/derive_values.py
Everything here works on explicit point lists of {0,1}^k vectors with
majority as the median; nothing is shared with the C++ code.
"""
from fractions import Fraction
from itertools import combinations, permutations, product


def maj(x, y, z):
    return tuple((a + b + c) >= 2 for a, b, c in zip(x, y, z))


def med_table(pts):
    idx = {p: i for i, p in enumerate(pts)}
    return lambda x, y, z: idx[maj(pts[x], pts[y], pts[z])]


def convex(n, m, s):
    return all(m(x, y, z) != z or z in s for x in s for y in s for z in range(n))


def walls(n, m):
    out = []
    for r in range(1, n):
        for s in combinations(range(n), r):
            s = set(s)
            if 0 in s and convex(n, m, s) and convex(n, m, set(range(n)) - s):
                out.append(frozenset(s))
    return out


def closed(m, s):
    return all(m(x, y, z) in s for x in s for y in s for z in s)


def is_cube(m, s):
    s = sorted(s)
    k = len(s).bit_length() - 1
    if 2 ** k != len(s) or not closed(m, set(s)):
        return False
    verts = list(product((0, 1), repeat=k))
    for perm in permutations(verts):
        f = dict(zip(s, perm))
        if all(f[m(x, y, z)] == maj(f[x], f[y], f[z]) for x in s for y in s for z in s):
            return True
    return False


def cubes(n, m):
    return [frozenset(c) for r in range(1, n + 1) for c in combinations(range(n), r)
            if is_cube(m, c)]


def phi(n, m, eta):
    out = [Fraction(0)] * n
    for x, y, z in product(range(n), repeat=3):
        out[m(x, y, z)] += eta[x] * eta[y] * eta[z]
    return out


def transverse(a, b, n):
    u = set(range(n))
    return all(p & q for p in (a, u - a) for q in (b, u - b))


def corpus(k):
    verts = list(product((0, 1), repeat=k))
    syms = []
    for perm in permutations(range(k)):
        for flip in product((0, 1), repeat=k):
            syms.append(lambda v, perm=perm, flip=flip: tuple(v[perm[j]] ^ flip[j] for j in range(k)))
    seen = set()
    for r in range(1, len(verts) + 1):
        for s in combinations(verts, r):
            ss = set(s)
            if not all(maj(x, y, z) in ss for x in s for y in s for z in s):
                continue
            canon = min(tuple(sorted(g(v) for v in s)) for g in syms)
            seen.add(canon)
    return seen


if __name__ == "__main__":
    P3 = [(0, 0), (1, 0), (1, 1)]
    m = med_table(P3)
    print("P3 walls", [sorted(w) for w in walls(3, m)])
    print("P3 cubes", len(cubes(3, m)))
    print("phi P3 (1/4,1/4,1/2)", phi(3, m, [Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)]))
    SQ = [(0, 0), (1, 0), (0, 1), (1, 1)]
    ms = med_table(SQ)
    print("square cubes", len(cubes(4, ms)))
    P3xC = [p + (s,) for p in P3 for s in (0, 1)]
    mp = med_table(P3xC)
    w = walls(6, mp)
    w1 = [a for a in w if all(a == b or transverse(a, b, 6) for b in w)]
    print("P3xC walls", len(w), "W1", [sorted(a) for a in w1])
    for k in range(1, 4):
        print("corpus", k, len(corpus(k)))
    # all surjective morphisms from P3 onto {0,1}
    cnt = 0
    for f in product((0, 1), repeat=3):
        if len(set(f)) == 2 and all(f[m(x, y, z)] == maj((f[x],), (f[y],), (f[z],))[0]
                                    for x, y, z in product(range(3), repeat=3)):
            cnt += 1
    print("P3 -> {0,1} surjective morphisms", cnt)
