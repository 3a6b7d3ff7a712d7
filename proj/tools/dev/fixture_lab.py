"""Search helpers used while building the fixture corpus (not part of the library)."""
import itertools
import random
import sys

import numpy as np
from scipy.spatial import ConvexHull

sys.path.insert(0, "build/python")
import pyttk  # noqa: E402


def random_triangulation(nv, rng):
    while True:
        pts = np.array([[rng.gauss(0, 1) for _ in range(3)] for _ in range(nv)])
        pts /= np.linalg.norm(pts, axis=1)[:, None]
        hull = ConvexHull(pts)
        tris = []
        for simplex in hull.simplices:
            a, b, c = simplex
            n = np.cross(pts[b] - pts[a], pts[c] - pts[a])
            if np.dot(n, pts[a]) < 0:
                b, c = c, b
            tris.append((int(a), int(b), int(c)))
        if len(tris) == 2 * nv - 4:
            return tris


def assign_cusps(tris, demand, rng):
    """Pick one corner per triangle so that vertex v receives demand[v] corners."""
    import networkx as nx

    g = nx.DiGraph()
    for i, t in enumerate(tris):
        g.add_edge("s", ("t", i), capacity=1)
        for v in t:
            g.add_edge(("t", i), ("v", v), capacity=1, weight=rng.randint(0, 5))
    for v, d in demand.items():
        g.add_edge(("v", v), "z", capacity=d)
    flow = nx.max_flow_min_cost(g, "s", "z")
    if sum(flow["s"].values()) != len(tris):
        return None
    out = []
    for i, t in enumerate(tris):
        out.append(next(v for v in t if flow[("t", i)].get(("v", v), 0) == 1))
    return out


def track_from_triangulation(tris, cusp, punctured):
    edges = {}
    for t in tris:
        for k in range(3):
            x, y = t[k], t[(k + 1) % 3]
            key = frozenset((x, y))
            if key not in edges:
                edges[key] = len(edges)
    ends_used = {}

    def end(key, tri):
        b = edges[key]
        if (b, tri) not in ends_used:
            ends_used[(b, tri)] = sum(1 for (bb, _) in ends_used if bb == b)
        return b, ends_used[(b, tri)]

    lines = ["ttk 1", "surface 0 %d" % len(punctured), "branches %d" % len(edges)]
    for i, (x, y, z) in enumerate(tris):
        # rotate so the cusp vertex comes first
        while x != cusp[i]:
            x, y, z = y, z, x
        a = end(frozenset((y, z)), i)
        b0 = end(frozenset((x, y)), i)
        b1 = end(frozenset((z, x)), i)
        lines.append("sw %d A %d.%d B %d.%d %d.%d" % (i + 1, a[0] + 1, a[1], b0[0] + 1, b0[1], b1[0] + 1, b1[1]))
    tr = pyttk.Track.parse("\n".join(lines) + "\n")
    star = {}
    for key, b in edges.items():
        for v in key:
            star.setdefault(v, set()).add(b)
    for bd, cusps, _ in tr.regions():
        bs = {b for b, _ in bd}
        for v in punctured:
            if star[v] == bs:
                b, s = bd[0]
                lines.append("punct %d.0 %s" % (b + 1, s))
    return pyttk.Track.parse("\n".join(lines) + "\n")


def random_g0m7(rng, m=7):
    nv = 2 * m - 4
    while True:
        tris = random_triangulation(nv, rng)
        deg = {}
        for t in tris:
            for v in t:
                deg[v] = deg.get(v, 0) + 1
        verts = list(range(nv))
        rng.shuffle(verts)
        punct = verts[:m]
        demand = {v: (1 if v in punct else 3) for v in verts}
        cusp = assign_cusps(tris, demand, rng)
        if cusp is None:
            continue
        tr = track_from_triangulation(tris, cusp, punct)
        rep = tr.validate()
        if not rep["maximal"]:
            continue
        if not tr.is_recurrent()[0] or not tr.is_transversely_recurrent()[0]:
            continue
        return tr


def adjacency(tr):
    """branch -> list of (switch index, slot) for both ends"""
    sw = tr.switches()
    where = {}
    for i, (_, a, b0, b1) in enumerate(sw):
        for pos, e in enumerate((a, b0, b1)):
            where[e] = (i, pos)
    return sw, where


def simple_cycles(tr, max_len=10):
    """Embedded closed trainpaths, each returned once as a branch list."""
    sw, where = adjacency(tr)
    p = tr.branches
    seen = set()
    out = []

    def other_slots(i, pos):
        return [1, 2] if pos == 0 else [0]

    def extend(path, used_sw, start_end):
        b, d = path[-1]
        i, pos = where[(b, 1 - d)]
        for q in other_slots(i, pos):
            nb, ne = sw[i][1 + q]
            if len(path) >= 1 and (nb, ne) == start_end and i not in used_sw[1:]:
                cyc = tuple(x for x, _ in path)
                key = frozenset(cyc)
                if key not in seen:
                    try:
                        tr.curve(list(cyc))
                        seen.add(key)
                        out.append(list(cyc))
                    except Exception:
                        pass
                continue
            if nb in {x for x, _ in path} or i in used_sw or len(path) >= max_len:
                continue
            path.append((nb, ne))
            used_sw.append(i)
            extend(path, used_sw, start_end)
            path.pop()
            used_sw.pop()

    for b in range(p):
        for d in (0, 1):
            i0, _ = where[(b, d)]
            extend([(b, d)], [i0], (b, d))
    return out


def random_g2m1(rng, tries=100000):
    """Random trivalent ribbon graph with 16 vertices and 6 faces (genus 2), cusps by flow."""
    import networkx as nx

    nv = 16
    for _ in range(tries):
        halves = list(range(3 * nv))
        rng.shuffle(halves)
        mate = {}
        for i in range(0, len(halves), 2):
            mate[halves[i]] = halves[i + 1]
            mate[halves[i + 1]] = halves[i]
        # half h sits at vertex h // 3, counterclockwise successor is the next slot
        nxt = lambda h: 3 * (h // 3) + (h % 3 + 1) % 3  # noqa: E731
        # faces: from half h, go across to mate, then clockwise at the far vertex
        prv = lambda h: 3 * (h // 3) + (h % 3 + 2) % 3  # noqa: E731
        face_of = {}
        faces = []
        for h in range(3 * nv):
            if h in face_of:
                continue
            f = len(faces)
            cyc = []
            x = h
            while x not in face_of:
                face_of[x] = f
                cyc.append(x)
                x = prv(mate[x])
            faces.append(cyc)
        if len(faces) != 6:
            continue
        g = nx.Graph()
        g.add_edges_from((h // 3, mate[h] // 3) for h in range(3 * nv))
        if not nx.is_connected(g):
            continue
        # corner at vertex v between half x and its clockwise neighbour lies in face_of[x]
        punct = rng.randrange(6)
        demand = {f: (1 if f == punct else 3) for f in range(6)}
        fg = nx.DiGraph()
        for v in range(nv):
            fg.add_edge("s", ("v", v), capacity=1)
            for k in range(3):
                fg.add_edge(("v", v), ("f", face_of[3 * v + k], k), capacity=1)
                fg.add_edge(("f", face_of[3 * v + k], k), ("f", face_of[3 * v + k]), capacity=1)
        for f, d in demand.items():
            fg.add_edge(("f", f), "z", capacity=d)
        val, flow = nx.maximum_flow(fg, "s", "z")
        if val != nv:
            continue
        edges = {}
        for h in range(3 * nv):
            if h not in edges:
                b = len(edges) // 2
                edges[h] = (b, 0)
                edges[mate[h]] = (b, 1)
        lines = ["ttk 1", "surface 2 1", "branches %d" % (3 * nv // 2)]
        for v in range(nv):
            k = next(k for k in range(3) if flow[("v", v)].get(("f", face_of[3 * v + k], k), 0) == 1)
            # the corner after half x (counterclockwise) lies in face_of[x]; it is the cusp
            x = 3 * v + k
            b0, a = nxt(x), prv(x)
            lines.append("sw %d A %d.%d B %d.%d %d.%d" % (v + 1, edges[a][0] + 1, edges[a][1],
                                                         edges[b0][0] + 1, edges[b0][1], edges[x][0] + 1, edges[x][1]))
        tr = pyttk.Track.parse("\n".join(lines) + "\n")
        for bd, cusps, _ in tr.regions():
            if cusps == 1:
                b, s = bd[0]
                lines.append("punct %d.0 %s" % (b + 1, s))
        try:
            tr = pyttk.Track.parse("\n".join(lines) + "\n")
        except Exception:
            continue
        rep = tr.validate()
        if not rep["maximal"]:
            continue
        if not tr.is_recurrent()[0] or not tr.is_transversely_recurrent()[0]:
            continue
        return tr
    return None


def curve_sides(tr, cycle):
    """For an embedded trainpath: (left component branches, right component branches,
    punctures left, punctures right) or None if the curve does not separate."""
    sw = tr.switches()
    slot = {}
    for i, (_, a, b0, b1) in enumerate(sw):
        for pos, e in enumerate((a, b0, b1)):
            slot[e] = (i, pos)
    _, fwd = tr.curve(cycle)
    on = set(cycle)
    on_sw = set()
    side_of = {}
    for i, b in enumerate(cycle):
        arr = (b, 1 if fwd[i] else 0)
        s, pos = slot[arr]
        on_sw.add(s)
        nb = cycle[(i + 1) % len(cycle)]
        used = {pos}
        for e in ((nb, 0), (nb, 1)):
            if slot[e][0] == s and e != arr:
                used.add(slot[e][1])
        third = ({0, 1, 2} - used).pop()
        off = sw[s][1 + third]
        merge = pos != 0
        left_from_a = third == 1
        right = left_from_a if merge else not left_from_a
        side_of.setdefault(off[0], set()).add("R" if right else "L")
    # components of the rest
    import networkx as nx

    g = nx.Graph()
    rest = [b for b in range(tr.branches) if b not in on]
    g.add_nodes_from(rest)
    for i, (_, a, b0, b1) in enumerate(sw):
        if i in on_sw:
            continue
        ends = [a[0], b0[0], b1[0]]
        for x in ends:
            for y in ends:
                if x != y:
                    g.add_edge(x, y)
    comps = list(nx.connected_components(g))
    left = set().union(*[c for c in comps if any("L" in side_of.get(b, ()) for b in c)] or [set()])
    right = set().union(*[c for c in comps if any("R" in side_of.get(b, ()) for b in c)] or [set()])
    if left & right:
        return None
    pl = pr = 0
    for bd, cusps, punct in tr.regions():
        bs = {b for b, _ in bd} - on
        if not punct:
            continue
        if bs & left:
            pl += 1
        elif bs & right:
            pr += 1
    return left, right, pl, pr, on_sw
