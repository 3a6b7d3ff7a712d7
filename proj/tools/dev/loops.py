"""Breadth-first search for splitting loops in the graph of track types."""
import collections
import sys

sys.path.insert(0, "build/python")
import pyttk  # noqa: E402


def large_branches(tr, allowed=None):
    roles = tr.roles()
    return [b for b, r in enumerate(roles) if r == "large" and (allowed is None or allowed(tr, b))]


def search_loops(start, max_nodes=20000, root=-1, allowed=None, want=50, recurrent_only=True):
    """Returns move lists (R/L, branch) that lead from start to a track of the same type."""
    key0 = start.canonical(root)
    seen = {key0: (None, None)}
    queue = collections.deque([(start, key0)])
    found = []
    while queue and len(seen) < max_nodes and len(found) < want:
        tr, key = queue.popleft()
        for b in large_branches(tr, allowed):
            for side in "RL":
                nt = tr.split(b, side)
                k = nt.canonical(root)
                if k == key0:
                    path = [(side, b)]
                    kk = key
                    while seen[kk][0] is not None:
                        kk, mv = seen[kk]
                        path.append(mv)
                    found.append(path[::-1])
                    continue
                if k in seen:
                    continue
                if recurrent_only and not nt.is_recurrent()[0]:
                    seen[k] = (None, None)
                    continue
                seen[k] = (key, (side, b))
                queue.append((nt, k))
    return found, len(seen)


def _bfs(start, step, root, max_nodes, allowed, recurrent_only):
    key0 = start.canonical(root)
    seen = {key0: (None, None, start)}
    queue = collections.deque([(start, key0)])
    while queue and len(seen) < max_nodes:
        tr, key = queue.popleft()
        for nt, mv in step(tr, allowed):
            k = nt.canonical(root)
            if k in seen:
                continue
            if recurrent_only and not nt.is_recurrent()[0]:
                continue
            seen[k] = (key, mv, nt)
            queue.append((nt, k))
    return seen


def _shifts(tr, allowed):
    for b, r in enumerate(tr.roles()):
        if r == "mixed" and (allowed is None or allowed(tr, b)):
            try:
                yield tr.shift(b), ("S", b)
            except Exception:
                pass


def _forward(tr, allowed):
    for b in large_branches(tr, allowed):
        for side in "RL":
            yield tr.split(b, side), (side, b)
    yield from _shifts(tr, allowed)


def _backward(tr, allowed):
    for b in range(tr.branches):
        if allowed is not None and not allowed(tr, b):
            continue
        for side in "RL":
            try:
                yield tr.collapse(b, side), (side, b)
            except Exception:
                pass
    for nt, mv in _shifts(tr, allowed):
        yield nt, ("U", mv[1], nt)


def _path(seen, key):
    out = []
    while seen[key][0] is not None:
        prev, mv, _ = seen[key]
        out.append(mv[:2])
        key = prev
    return out[::-1]


def meet_loops(start, max_nodes=20000, root=-1, allowed=None, recurrent_only=True):
    """Loops start -> X (splits) and X -> start (reversed collapses), glued along an isomorphism."""
    fw = _bfs(start, _forward, root, max_nodes, allowed, recurrent_only)
    bw = _bfs(start, _backward, root, max_nodes, allowed, recurrent_only)
    loops_found = []
    for key in fw:
        if key not in bw or bw[key][0] is None and fw[key][0] is None:
            continue
        f_moves = _path(fw, key)
        b_path = _path(bw, key)
        fx, bx = fw[key][2], bw[key][2]
        isos = bx.isomorphisms(fx)
        if not isos:
            continue
        g = isos[0]
        # undo the backward steps from bx towards start; an undone shift is the
        # shift on the earlier track that produced it, found by search
        seq = []
        cur_tracks = [start]
        kk = key
        chain = []
        while bw[kk][0] is not None:
            prev, mv, t_here = bw[kk]
            chain.append((bw[prev][2], mv, t_here))
            kk = prev
        moves_back = []
        ok = True
        for t_before, mv, t_after in chain:
            # t_after was reached from t_before; we need a move from t_after to t_before
            if mv[0] in "RL":
                moves_back.append((mv[0], mv[1]))
            else:
                inv = None
                for b, r in enumerate(t_after.roles()):
                    if r == "mixed":
                        try:
                            if t_after.shift(b) == t_before:
                                inv = ("S", b)
                                break
                        except Exception:
                            pass
                if inv is None:
                    ok = False
                    break
                moves_back.append(inv)
        if not ok:
            continue
        loops_found.append((f_moves + [(s, g[b]) for s, b in moves_back], key))
    return loops_found, len(fw), len(bw)


def random_measure(tr, rng, scale=10**6):
    from fractions import Fraction

    w = [Fraction(x) for x in tr.is_recurrent()[1]]
    ker = [[Fraction(x) for x in v] for v in tr.switch_kernel()]
    while True:
        mu = [x * scale for x in w]
        for v in ker:
            c = Fraction(rng.randint(-scale, scale), 7 * len(ker))
            mu = [a + c * min(w) * b / max(1, max(abs(y) for y in v)) for a, b in zip(mu, v)]
        if all(x > 0 for x in mu):
            return mu


def lambda_walk(tr, rng, steps):
    from fractions import Fraction

    mu = random_measure(tr, rng)
    moves = []
    for _ in range(steps):
        lg = large_branches(tr)
        b = rng.choice(lg)
        side, tr, w = pyttk.lambda_split(tr, [str(x) for x in mu], b)
        mu = [Fraction(x) for x in w]
        moves.append((side, b))
    return tr, moves


def forward_loops(start, max_nodes=20000, root=-1, allowed=None, want=200):
    key0 = start.canonical(root)
    seen = {key0: (None, None)}
    queue = collections.deque([(start, key0)])
    found = []
    while queue and len(seen) < max_nodes and len(found) < want:
        tr, key = queue.popleft()
        for b in large_branches(tr, allowed):
            for side in "RL":
                nt = tr.split(b, side)
                k = nt.canonical(root)
                if k == key0:
                    path = [(side, b)]
                    kk = key
                    while seen[kk][0] is not None:
                        kk, mv = seen[kk]
                        path.append(mv)
                    found.append(path[::-1])
                    continue
                if k in seen:
                    continue
                seen[k] = (key, (side, b))
                queue.append((nt, k))
    return found, len(seen)


def allowed_away_from(forbidden_ids):
    """Moves at branches none of whose switches has an id in forbidden_ids."""
    def ok(tr, b):
        sws = tr.switches()
        ids = set()
        for (sid, a, b0, b1) in sws:
            if b in (a[0], b0[0], b1[0]):
                ids.add(sid)
        return not (ids & forbidden_ids)
    return ok


def restricted_walk(tr, rng, steps, allowed):
    from fractions import Fraction

    mu = random_measure(tr, rng)
    moves = []
    for _ in range(steps):
        lg = large_branches(tr, allowed)
        if not lg:
            break
        b = rng.choice(lg)
        side, tr, w = pyttk.lambda_split(tr, [str(x) for x in mu], b)
        mu = [Fraction(x) for x in w]
        moves.append((side, b))
    return tr, moves


def fixing_iso(end, start, fixed):
    for g in end.isomorphisms(start):
        if all(g[b] == b for b in fixed):
            return g
    return None


def end_iso(tr, moves):
    end = pyttk.end_track(tr, moves)
    return end.isomorphism(tr)


def concat(tr, a, b):
    g = end_iso(tr, a)
    inv = [0] * len(g)
    for j, x in enumerate(g):
        inv[x] = j
    return a + [(s, inv[x]) for s, x in b]


def sub_measure(tr, rng, support, samples=40):
    """Random positive measure on the branches in support, zero elsewhere.

    Averages many random vertices of the normalized cone with random weights so
    the result sits well inside the cone instead of near a curve."""
    from fractions import Fraction
    import sympy
    from scipy.optimize import linprog

    ker = [[Fraction(x) for x in v] for v in tr.switch_kernel()]
    p, k = tr.branches, len(ker)
    out = [b for b in range(p) if b not in support]
    if out:
        M = sympy.Matrix([[ker[i][b] for i in range(k)] for b in out])
        basis = [[Fraction(int(x.p), int(x.q)) for x in v] for v in M.nullspace()]
    else:
        basis = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    vecs = [[sum(c[i] * ker[i][b] for i in range(k)) for b in range(p)] for c in basis]
    sup = sorted(support)
    n = len(vecs)
    A_ub = [[-float(v[b]) for v in vecs] for b in sup]
    A_eq = [[float(sum(v)) for v in vecs]]
    acc = [Fraction(0)] * n
    for _ in range(samples):
        obj = [sum(rng.gauss(0, 1) * float(v[b]) for b in sup) for v in vecs]
        r = linprog(obj, A_ub=A_ub, b_ub=[0.0] * len(sup), A_eq=A_eq, b_eq=[1.0], bounds=[(None, None)] * n)
        if not r.success:
            return None
        wgt = Fraction(rng.randint(1, 1000))
        acc = [a + wgt * Fraction(x).limit_denominator(10**9) for a, x in zip(acc, r.x)]
    tot = sum(abs(a) for a in acc)
    for _ in range(100):
        # generic jitter so no two weights tie by accident
        c = [a + tot * Fraction(rng.randint(-10**6, 10**6), 10**12 + 7) for a in acc]
        mu = [sum(c[i] * vecs[i][b] for i in range(n)) for b in range(p)]
        if all(mu[b] > 0 for b in sup):
            return mu
    return None
