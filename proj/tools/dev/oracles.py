"""Independent checks for the values frozen into the unit tests.

Parses track files directly (no pyttk) and traces complementary regions from
the ribbon structure; feasibility optima come from scipy in floating point.

Usage: python3 tools/dev/oracles.py fixtures/g0m7.ttk
"""
import re
import sys
from collections import Counter

import numpy as np
from scipy.optimize import linprog


def parse(path):
    sws, p, punct = [], 0, []
    for line in open(path):
        line = line.split("#")[0].strip()
        if line.startswith("branches"):
            p = int(line.split()[1])
        elif line.startswith("sw "):
            ends = [tuple(int(x) for x in m.split(".")) for m in re.findall(r"\((\d+\.\d)\)", line)]
            sws.append(ends)  # a, b0, b1 ; 1-based branch
        elif line.startswith("punct"):
            punct.append(line.split()[1:])
    return p, sws, punct


def faces(p, sws):
    # ccw order at a switch: b0, a, b1; the cusp sits between b1 and b0
    rot, pos = {}, {}
    for i, (a, b0, b1) in enumerate(sws):
        cyc = [b0, a, b1]
        for k, h in enumerate(cyc):
            rot[h] = cyc[(k + 1) % 3]
            pos[h] = k
    seen, out = set(), []
    for h0 in rot:
        if h0 in seen:
            continue
        h, path, cusps = h0, [], 0
        while h not in seen:
            seen.add(h)
            other = (h[0], 1 - h[1])
            path.append(h[0])
            if pos[other] == 2:
                cusps += 1
                path.append(None)
            h = rot[other]
        out.append((path, cusps))
    return out




def recurrence_opt(p, sws):
    # max t s.t. mu >= t, switch conditions, sum mu = 1
    A_eq = []
    for a, b0, b1 in sws:
        r = [0.0] * (p + 1)
        r[a[0] - 1] += 1
        r[b0[0] - 1] -= 1
        r[b1[0] - 1] -= 1
        A_eq.append(r)
    A_eq.append([1.0] * p + [0.0])
    b_eq = [0.0] * len(sws) + [1.0]
    A_ub = [[-1.0 if j == i else 0.0 for j in range(p)] + [1.0] for i in range(p)]
    res = linprog([0.0] * p + [-1.0], A_ub=A_ub, b_ub=[0.0] * p, A_eq=A_eq, b_eq=b_eq,
                  bounds=[(0, None)] * p + [(None, None)])
    return -res.fun


def tangential_opt(p, tris):
    A_ub, b_ub = [], []
    for sides in tris:
        for i in range(3):
            r = [0.0] * (p + 1)
            for b in sides[i]:
                r[b - 1] += 1
            for j in (1, 2):
                for b in sides[(i + j) % 3]:
                    r[b - 1] -= 1
            A_ub.append(r)
            b_ub.append(0.0)
    for i in range(p):
        A_ub.append([-1.0 if j == i else 0.0 for j in range(p)] + [1.0])
        b_ub.append(0.0)
    res = linprog([0.0] * p + [-1.0], A_ub=A_ub, b_ub=b_ub, A_eq=[[1.0] * p + [0.0]], b_eq=[1.0],
                  bounds=[(0, None)] * p + [(None, None)])
    return -res.fun


def main(path):
    p, sws, punct = parse(path)
    fs = faces(p, sws)
    print("branches", p, "switches", len(sws), "regions", len(fs))
    print("cusp multiset", sorted(Counter(c for _, c in fs).items()))
    tris = []
    for path, c in fs:
        if c != 3:
            continue
        # rotate so the path starts right after a cusp, then cut at cusps
        k = path.index(None)
        path = path[k + 1:] + path[:k + 1]
        sides, cur = [], []
        for x in path:
            if x is None:
                sides.append(cur)
                cur = []
            else:
                cur.append(x)
        tris.append(sides)
    if all(c in (1, 3) for _, c in fs):
        print("tangential max-min", tangential_opt(p, tris))
    roles = Counter()
    large = {a for a, _, _ in sws}
    for b in range(1, p + 1):
        n = (b, 0) in large and 1 or 0
        n += (b, 1) in large and 1 or 0
        roles[["small", "mixed", "large"][n]] += 1
    print("roles", dict(roles))
    print("recurrence max-min", recurrence_opt(p, sws))


if __name__ == "__main__":
    for f in sys.argv[1:]:
        main(f)
