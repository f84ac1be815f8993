#!/usr/bin/env python3
"""Regenerate the bundled fixture schemes under tests/fixtures/.

Every scheme is built from an explicit construction (group multiplication
table, graph distance partition, direct/wreath product, cyclotomy) and is
checked against the scheme axioms by exhaustive triple counting before it is
written. Output is deterministic.

    python3 tools/gen_fixtures.py [--out tests/fixtures]
"""

import argparse
import itertools
import json
import os
from collections import deque


# --- constructions --------------------------------------------------------

def canonical(n, raw):
    """Relabel raw cell labels: diagonal -> 0, others by first occurrence in
    row-major order."""
    labels = {}
    diag = raw(0, 0)
    labels[diag] = 0
    cells = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            r = raw(x, y)
            if r not in labels:
                labels[r] = len(labels)
            cells[x][y] = labels[r]
    return cells


def explicit(n, cell):
    return [[cell(x, y) for y in range(n)] for x in range(n)]


def perm_group(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = tuple(h[g[i]] for i in range(n))
            if gh not in seen:
                seen.add(gh)
                order.append(gh)
                queue.append(gh)
    return sorted(order)


def thin_from_group(elems, mul, inv):
    n = len(elems)
    return canonical(n, lambda x, y: mul(inv(elems[x]), elems[y]))


def thin_from_perms(gens):
    g = perm_group(gens)
    m = len(g[0])

    def mul(a, b):
        return tuple(b[a[i]] for i in range(m))

    def inv(a):
        r = [0] * m
        for i, v in enumerate(a):
            r[v] = i
        return tuple(r)

    return thin_from_group(g, mul, inv)


def cyclic(n):
    return canonical(n, lambda x, y: (y - x) % n)


def complete(n):
    return explicit(n, lambda x, y: 0 if x == y else 1)


def distance_scheme(n, adj):
    dist = []
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if d[v] < 0:
                    d[v] = d[u] + 1
                    q.append(v)
        dist.append(d)
    return explicit(n, lambda x, y: dist[x][y])


def cycle(n):
    return distance_scheme(n, [[(i - 1) % n, (i + 1) % n] for i in range(n)])


def cube():
    return distance_scheme(8, [[i ^ (1 << b) for b in range(3)] for i in range(8)])


def petersen():
    pairs = list(itertools.combinations(range(5), 2))
    adj = [[j for j, q in enumerate(pairs) if not set(p) & set(q)] for p in pairs]
    return distance_scheme(10, adj)


def hamming(length, q):
    words = list(itertools.product(range(q), repeat=length))
    return explicit(len(words), lambda x, y: sum(a != b for a, b in zip(words[x], words[y])))


def direct_product(a, b):
    na, nb = len(a), len(b)
    return canonical(na * nb, lambda x, y: (a[x // nb][y // nb], b[x % nb][y % nb]))


def blocks(m, size):
    """m disjoint copies of K_size: same point / same block / other block."""
    def cell(x, y):
        if x == y:
            return 0
        return 1 if x // size == y // size else 2
    return explicit(m * size, cell)


def pair_blowup(n):
    """Each point of the thin scheme Z_n doubled: relations are the two
    in-pair relations plus one valency-2 relation per nonzero shift."""
    def cell(x, y):
        a, b = x % n, y % n
        if a == b:
            return 0 if x == y else 1
        return 1 + (b - a) % n
    return explicit(2 * n, cell)


def group_in_blocks(n, m):
    """m blocks carrying Z_n each; everything between blocks is one relation."""
    def cell(x, y):
        if x // n == y // n:
            return (y % n - x % n) % n
        return n
    return explicit(n * m, cell)


def cyclotomic_prime(p, subgroup):
    sub = set(subgroup)
    cosets = []
    for a in range(1, p):
        c = frozenset((a * s) % p for s in sub)
        if c not in cosets:
            cosets.append(c)

    def cell(x, y):
        diff = (y - x) % p
        if diff == 0:
            return 0
        return 1 + next(i for i, c in enumerate(cosets) if diff in c)
    return explicit(p, cell)


def gf9_cyclotomic():
    # GF(9) = GF(3)[i], i^2 = -1; relations by (y - x) modulo {1, -1}.
    elems = [(a, b) for a in range(3) for b in range(3)]

    def sub(u, v):
        return ((u[0] - v[0]) % 3, (u[1] - v[1]) % 3)

    def neg(u):
        return ((-u[0]) % 3, (-u[1]) % 3)

    def cell(x, y):
        diff = sub(elems[y], elems[x])
        if diff == (0, 0):
            return ("zero",)
        return min(diff, neg(diff))
    return canonical(9, cell)


# --- reference schemes with known invariants ----------------------------

def reference_order5_no2():
    return explicit(5, lambda x, y: min((y - x) % 5, (x - y) % 5))


def reference_order6_no2():
    return explicit(6, lambda x, y: 0 if x == y else (1 if x // 2 == y // 2 else 2))


def reference_order6_no4():
    # x = a + 3b: Z_3 acting inside each of two blocks.
    return group_in_blocks(3, 2)


def reference_order6_no5():
    # Hexagon distance partition labelled R_1 = distance 3, R_2 = distance 2,
    # R_3 = distance 1.
    relabel = {0: 0, 3: 1, 2: 2, 1: 3}
    return explicit(6, lambda x, y: relabel[min((y - x) % 6, (x - y) % 6)])


def reference_order6_no6():
    # x = a + 3b: pairs {a, a+3}; shifting the pair by +1 / -1 gives R_2 / R_3.
    def cell(x, y):
        a, b = x % 3, y % 3
        if a == b:
            return 0 if x == y else 1
        return 2 if (b - a) % 3 == 1 else 3
    return explicit(6, cell)


# --- axiom check (independent exhaustive counting) ------------------------

def check_scheme(cells):
    n = len(cells)
    d = max(max(r) for r in cells)
    for x in range(n):
        for y in range(n):
            if (cells[x][y] == 0) != (x == y):
                raise ValueError("identity relation broken")
    present = {c for r in cells for c in r}
    if present != set(range(d + 1)):
        raise ValueError("missing relation index")
    for i in range(d + 1):
        t = {cells[y][x] for x in range(n) for y in range(n) if cells[x][y] == i}
        if len(t) != 1:
            raise ValueError("relation %d not closed under transpose" % i)
    p = {}
    for x in range(n):
        for y in range(n):
            k = cells[x][y]
            cnt = {}
            for z in range(n):
                key = (cells[x][z], cells[z][y])
                cnt[key] = cnt.get(key, 0) + 1
            for i in range(d + 1):
                for j in range(d + 1):
                    c = cnt.get((i, j), 0)
                    if p.setdefault((i, j, k), c) != c:
                        raise ValueError("counts differ for (%d,%d,%d)" % (i, j, k))
    tensor = [[[p[(i, j, k)] for k in range(d + 1)] for j in range(d + 1)] for i in range(d + 1)]
    return d, tensor


def rm_text(cells):
    n = len(cells)
    d = max(max(r) for r in cells)
    lines = [str(n)]
    for row in cells:
        if d <= 9:
            lines.append("".join(str(c) for c in row))
        else:
            lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


REFERENCE = [
    ("order05-no02", reference_order5_no2, "pentagon: distance partition of the 5-cycle"),
    ("order06-no02", reference_order6_no2, "perfect matching (k=1) and its complement (k=4)"),
    ("order06-no04", reference_order6_no4, "Z_3 inside each of two blocks, one relation between blocks"),
    ("order06-no05", reference_order6_no5, "hexagon; R_1 antipodal, R_2 distance 2, R_3 distance 1"),
    ("order06-no06", reference_order6_no6, "three pairs cyclically ordered; R_2, R_3 shift by +1, -1"),
]


def d4_gens():
    return [(1, 2, 3, 0), (3, 2, 1, 0)]


def q8_regular():
    # Quaternion group as pairs (sign, unit) with units 1, i, j, k.
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in ("1", "i", "j", "k")]

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    def inv(a):
        return a if a[1] == "1" else (-a[0], a[1])

    return thin_from_group(elems, mul, inv)


OTHERS = [
    ("order01-trivial", lambda: complete(1), "one point"),
    ("order02-k2", lambda: complete(2), "complete graph K_2 (thin, Z_2)"),
    ("order03-z3", lambda: cyclic(3), "thin scheme of Z_3"),
    ("order03-k3", lambda: complete(3), "complete graph K_3"),
    ("order04-z4", lambda: cyclic(4), "thin scheme of Z_4"),
    ("order04-z2xz2", lambda: thin_from_group([(a, b) for a in range(2) for b in range(2)],
                                              lambda u, v: (u[0] ^ v[0], u[1] ^ v[1]), lambda u: u),
     "thin scheme of Z_2 x Z_2"),
    ("order04-k4", lambda: complete(4), "complete graph K_4"),
    ("order04-c4", lambda: cycle(4), "distance partition of the 4-cycle"),
    ("order05-z5", lambda: cyclic(5), "thin scheme of Z_5"),
    ("order05-k5", lambda: complete(5), "complete graph K_5"),
    ("order06-z6", lambda: cyclic(6), "thin scheme of Z_6"),
    ("order06-s3", lambda: thin_from_perms([(1, 2, 0), (1, 0, 2)]), "thin scheme of S_3"),
    ("order06-k6", lambda: complete(6), "complete graph K_6"),
    ("order06-2k3", lambda: blocks(2, 3), "two blocks of size 3"),
    ("order07-z7", lambda: cyclic(7), "thin scheme of Z_7"),
    ("order07-k7", lambda: complete(7), "complete graph K_7"),
    ("order07-c7", lambda: cycle(7), "distance partition of the 7-cycle"),
    ("order07-cyc3", lambda: cyclotomic_prime(7, [1, 2, 4]), "cyclotomic scheme of GF(7), index 2 (non-symmetric)"),
    ("order08-z8", lambda: cyclic(8), "thin scheme of Z_8"),
    ("order08-z2x3", lambda: thin_from_group(list(range(8)), lambda u, v: u ^ v, lambda u: u),
     "thin scheme of Z_2^3"),
    ("order08-d4", lambda: thin_from_perms(d4_gens()), "thin scheme of the dihedral group of order 8"),
    ("order08-q8", q8_regular, "thin scheme of the quaternion group"),
    ("order08-k8", lambda: complete(8), "complete graph K_8"),
    ("order08-cube", cube, "distance partition of the 3-cube"),
    ("order08-c8", lambda: cycle(8), "distance partition of the 8-cycle"),
    ("order08-4k2", lambda: blocks(4, 2), "perfect matching and its complement"),
    ("order08-2k4", lambda: blocks(2, 4), "two blocks of size 4"),
    ("order08-z4-pairs", lambda: pair_blowup(4), "Z_4 with every point doubled"),
    ("order08-z4-blocks", lambda: group_in_blocks(4, 2), "Z_4 inside each of two blocks"),
    ("order08-k2xc4", lambda: direct_product(complete(2), cycle(4)), "direct product K_2 x C_4"),
    ("order09-z9", lambda: cyclic(9), "thin scheme of Z_9"),
    ("order09-z3xz3", lambda: thin_from_group([(a, b) for a in range(3) for b in range(3)],
                                              lambda u, v: ((u[0] + v[0]) % 3, (u[1] + v[1]) % 3),
                                              lambda u: ((-u[0]) % 3, (-u[1]) % 3)),
     "thin scheme of Z_3 x Z_3"),
    ("order09-k9", lambda: complete(9), "complete graph K_9"),
    ("order09-h23", lambda: hamming(2, 3), "Hamming scheme H(2,3)"),
    ("order09-k3xk3", lambda: direct_product(complete(3), complete(3)), "direct product K_3 x K_3"),
    ("order09-c9", lambda: cycle(9), "distance partition of the 9-cycle"),
    ("order09-3k3", lambda: blocks(3, 3), "three blocks of size 3"),
    ("order09-gf9-cyc4", gf9_cyclotomic, "cyclotomic scheme of GF(9), index 4"),
    ("order09-z3-blocks", lambda: group_in_blocks(3, 3), "Z_3 inside each of three blocks"),
    ("order09-z3xk3", lambda: direct_product(cyclic(3), complete(3)), "direct product Z_3 x K_3"),
    ("order10-z10", lambda: cyclic(10), "thin scheme of Z_10"),
    ("order10-d5", lambda: thin_from_perms([(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)]), "thin scheme of the dihedral group of order 10"),
    ("order10-k10", lambda: complete(10), "complete graph K_10"),
    ("order10-petersen", petersen, "distance partition of the Petersen graph"),
    ("order10-c10", lambda: cycle(10), "distance partition of the 10-cycle"),
    ("order10-5k2", lambda: blocks(5, 2), "perfect matching and its complement"),
    ("order10-2k5", lambda: blocks(2, 5), "two blocks of size 5"),
    ("order10-z5-pairs", lambda: pair_blowup(5), "Z_5 with every point doubled"),
    ("order10-z5-blocks", lambda: group_in_blocks(5, 2), "Z_5 inside each of two blocks"),
    ("order10-k2xc5", lambda: direct_product(complete(2), cycle(5)), "direct product K_2 x pentagon"),
]


def main():
    ap = argparse.ArgumentParser()
    here = os.path.dirname(os.path.abspath(__file__))
    ap.add_argument("--out", default=os.path.join(here, "..", "tests", "fixtures"))
    args = ap.parse_args()
    out = os.path.normpath(args.out)
    os.makedirs(os.path.join(out, "schemes"), exist_ok=True)

    def block(sid, desc, cells):
        return "# %s\n## %s\n%s" % (sid, desc, rm_text(cells))

    reference_blocks, all_blocks = [], []
    entries = [(s, f, d, True) for s, f, d in REFERENCE] + [(s, f, d, False) for s, f, d in OTHERS]
    entries.sort(key=lambda e: e[0])
    for sid, make, desc, is_reference in entries:
        cells = make()
        d, tensor = check_scheme(cells)
        with open(os.path.join(out, "schemes", sid + ".rm"), "w") as fh:
            fh.write("# %s\n%s" % (desc, rm_text(cells)))
        text = block(sid, desc, cells)
        all_blocks.append(text)
        if is_reference:
            reference_blocks.append(text)
        if sid == "order05-no02":
            with open(os.path.join(out, "pentagon.tensor.json"), "w") as fh:
                fh.write(json.dumps({"d": d, "order": len(cells), "p": tensor}, separators=(",", ":")) + "\n")

    with open(os.path.join(out, "catalog.cat"), "w") as fh:
        fh.write("".join(all_blocks))
    with open(os.path.join(out, "reference.cat"), "w") as fh:
        fh.write("".join(reference_blocks))
    print("wrote %d schemes (%d reference)" % (len(all_blocks), len(reference_blocks)))


if __name__ == "__main__":
    main()
