"""Builds the zeta bundle fixture on the 7-punctured sphere.

Steps (all deterministic):
  1. a maximal track on the 5-punctured sphere from a random triangulation
     (seed 1), pushed 100 lambda-splits forward;
  2. two punctured monogons opened up into a connector plus a three-switch
     curve gamma_i cutting off two punctures (bundle_build.grow);
  3. for each subsurface, split-only loops found by a forward split search
     meeting a backward collapse search, restricted to moves away from the
     relevant gamma switches and keeping the connectors on side B;
  4. the loop with the smallest power that is positive on its subtrack block,
     raised to that power.

Usage: PYTHONPATH=build/python python3 tools/dev/zeta_bundle.py fixtures
"""
import collections
import json
import os
import random
import sys

sys.path.insert(0, os.path.dirname(__file__))
import bundle_build as bb  # noqa: E402
import fixture_lab as fl  # noqa: E402
import loops  # noqa: E402
import pyttk  # noqa: E402

N = 200000


def base_track():
    rng = random.Random(1)
    s0 = fl.random_g0m7(rng, 5)
    s0, _ = loops.lambda_walk(s0, rng, 100)
    mono = [i for i, (bd, c, pn) in enumerate(s0.regions()) if pn]
    return bb.grow(s0, mono[:2])


class Restricted:
    def __init__(self, tau, gs, out, conns, root):
        self.tau, self.gs, self.out, self.conns, self.root = tau, set(gs), set(out), set(conns), root

    def bad(self, tr):
        b = set(self.out)
        for sid, a, b0, b1 in tr.switches():
            if sid in self.gs:
                b |= {a[0], b0[0], b1[0]}
        return b

    def conn_ok(self, tr):
        return all(a[0] not in self.conns for _, a, _, _ in tr.switches())

    def forward(self, tr):
        bd = self.bad(tr)
        for b, r in enumerate(tr.roles()):
            if r == "large" and b not in bd:
                for s in "RL":
                    nt = tr.split(b, s)
                    if self.conn_ok(nt):
                        yield (s, b), nt

    def backward(self, tr):
        bd = self.bad(tr)
        for b, r in enumerate(tr.roles()):
            if r != "small" or b in bd:
                continue
            for s in "RL":
                try:
                    pt = tr.collapse(b, s)
                except Exception:
                    continue
                if pt.roles()[b] != "large" or b in self.bad(pt) or not self.conn_ok(pt):
                    continue
                yield (s, b), pt

    def bfs(self, step):
        k0 = self.tau.canonical(self.root)
        seen = {k0: (None, None, self.tau)}
        q = collections.deque([self.tau])
        while q and len(seen) < N:
            tr = q.popleft()
            key = tr.canonical(self.root)
            for m, nt in step(tr):
                k = nt.canonical(self.root)
                if k not in seen:
                    seen[k] = (key, m, nt)
                    q.append(nt)
        return seen


def chain(S, k):
    out = []
    while S[k][0] is not None:
        pk, m, _ = S[k]
        out.append(m)
        k = pk
    return out


def matmul(X, Y):
    n = len(X)
    return [[sum(X[i][k] * Y[k][j] for k in range(n) if X[i][k]) for j in range(n)] for i in range(n)]


def period(tau, moves, h):
    A = [[int(x) for x in r] for r in pyttk.carrying_matrix(tau, moves)]
    p = len(A)
    C = [[0] * p for _ in range(p)]
    for j in range(p):
        for i in range(p):
            C[i][h[j]] = A[i][j]
    return C


def cat(a, ha, b, hb):
    inv = [0] * len(ha)
    for j, x in enumerate(ha):
        inv[x] = j
    return a + [(s, inv[x]) for s, x in b], [hb[ha[j]] for j in range(len(ha))]


def find_loops(R, block, limit=400):
    F = R.bfs(R.forward)
    B = R.bfs(R.backward)
    common = [k for k in F if k in B and F[k][0] is not None and B[k][0] is not None]
    common.sort(key=lambda k: (len(chain(F, k)) + len(chain(B, k)), k))
    p = R.tau.branches
    res = []
    for k in common[:limit]:
        fm = chain(F, k)[::-1]
        back = chain(B, k)
        fx, bx = F[k][2], B[k][2]
        for g in fx.isomorphisms(bx):
            inv = [0] * p
            for j, x in enumerate(g):
                inv[x] = j
            moves = fm + [(s, inv[b]) for s, b in back]
            h = loops.fixing_iso(pyttk.end_track(R.tau, moves), R.tau, R.out)
            if h is None:
                continue
            C = period(R.tau, moves, h)
            M, pw = C, 1
            while pw <= 6 and not all(M[i][j] > 0 for i in block for j in block):
                M, pw = matmul(M, C), pw + 1
            if pw <= 6:
                res.append((len(moves) * pw, len(moves), pw, moves, h))
            break
    res.sort(key=lambda r: (r[0], r[1]))
    return res


def write_seq(path, track_file, moves, iso):
    with open(path, "w") as f:
        f.write("seq v1\ntrack %s\n" % track_file)
        for s, b in moves:
            f.write("split %d %s\n" % (b + 1, s))
        if iso is not None:
            f.write("iso %s\n" % " ".join(str(x + 1) for x in iso))


def main(outdir):
    tau, info = base_track()
    p = tau.branches
    gsw, conns = info["gamma_switches"], info["connector"]
    idx = {s[0]: i for i, s in enumerate(tau.switches())}
    outside = [set(info["gamma"][i]) | {info["arc"][i], conns[i]} for i in range(2)]
    specs = {
        0: Restricted(tau, gsw[0] + gsw[1], outside[0] | outside[1], conns, idx[gsw[0][0]]),
        1: Restricted(tau, gsw[0], outside[0], [conns[0]], idx[gsw[0][0]]),
        2: Restricted(tau, gsw[1], outside[1], [conns[1]], idx[gsw[1][0]]),
    }
    phi = {}
    for w, R in specs.items():
        block = sorted(set(range(p)) - R.out)
        found = find_loops(R, block)
        _, n, pw, mv, h = found[0]
        M, H = mv, h
        for _ in range(pw - 1):
            M, H = cat(M, H, mv, h)
        phi[w] = (M, H, n, pw)
        print("phi%d: loop of %d splits, positive on its block at power %d" % (w, n, pw), flush=True)
    zdir = os.path.join(outdir, "zeta")
    os.makedirs(zdir, exist_ok=True)
    with open(os.path.join(zdir, "track.ttk"), "w") as f:
        f.write(tau.serialize())
    sig = {0: sorted(set(range(p)) - outside[0] - outside[1]),
           1: sorted(set(range(p)) - outside[0]),
           2: sorted(set(range(p)) - outside[1])}
    lines = ["bundle 1", "track track.ttk", "value surface 0,7"]
    for w in (0, 1, 2):
        lines.append("subtrack sigma%d %s" % (w, " ".join(str(b + 1) for b in sig[w])))
    for i in range(2):
        lines.append("curve gamma%d %s" % (i + 1, " ".join(str(b + 1) for b in info["gamma"][i])))
    for w in (0, 1, 2):
        M, H, n, pw = phi[w]
        write_seq(os.path.join(zdir, "phi%d.seq" % w), "track.ttk", M, H)
        lines.append("loop phi%d phi%d.seq" % (w, w))
    with open(os.path.join(zdir, "bundle.txt"), "w") as f:
        f.write("\n".join(lines) + "\n")
    with open(os.path.join(zdir, "search.json"), "w") as f:
        json.dump({"info": info, "phi": {w: {"splits": phi[w][2], "power": phi[w][3]} for w in phi}}, f, indent=1)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
