"""Assemble a track on the 7-punctured sphere from a maximal track on the
5-punctured sphere by replacing two punctured monogons with a connector, a
three-switch curve gamma and an arc cutting off two punctured monogons."""
import sys

sys.path.insert(0, "build/python")
import pyttk  # noqa: E402


def parse_switches(tr):
    return [(sid, a, b0, b1) for sid, a, b0, b1 in tr.switches()]


def region_marks(tr):
    """Current puncture marks as (region index) set."""
    return [i for i, (_, _, punct) in enumerate(tr.regions()) if punct]


def grow(sigma0, monogons):
    """monogons: two region indices of sigma0 (punctured monogons) to open up.
    Returns (track text, info dict with curve cycles and branch sets)."""
    sws = [list(s) for s in parse_switches(sigma0)]
    p = sigma0.branches
    next_id = max(s[0] for s in sws) + 1
    regions = sigma0.regions()
    info = {"gamma": [], "connector": [], "arc": [], "x_switch": [], "gamma_switches": []}
    keep_regions = []
    for ri in monogons:
        bd, cusps, punct = regions[ri]
        assert cusps == 1 and punct
        beta, side = bd[0]
        # subdivide beta (end 0 at s, end 1 at s') into beta (s -> x) and beta2 (x -> s')
        beta2 = p
        conn = p + 1
        h1, h2, h3, arc = p + 2, p + 3, p + 4, p + 5
        p += 6
        for s in sws:
            for k in (1, 2, 3):
                if s[k] == (beta, 1):
                    s[k] = (beta2, 1)
        x_id, ga, gb, gc = next_id, next_id + 1, next_id + 2, next_id + 3
        next_id += 4
        # diverge at x travelling 0 -> 1 along beta; connector enters the monogon
        if side == "L":
            sws.append([x_id, (beta, 1), (conn, 0), (beta2, 0)])
        else:
            sws.append([x_id, (beta, 1), (beta2, 0), (conn, 0)])
        # gamma travelled counterclockwise around the disc: h1 ga->gb, h2 gb->gc, h3 gc->ga
        # connector merges from the right at ga; arc diverges to the left at gb and at gc
        sws.append([ga, (h1, 0), (conn, 1), (h3, 1)])
        sws.append([gb, (h1, 1), (arc, 0), (h2, 0)])
        sws.append([gc, (h2, 1), (arc, 1), (h3, 0)])
        info["gamma"].append([h1, h2, h3])
        info["connector"].append(conn)
        info["arc"].append(arc)
        info["x_switch"].append(x_id)
        info["gamma_switches"].append([ga, gb, gc])
    lines = ["ttk 1", "surface 0 7", "branches %d" % p]
    for sid, a, b0, b1 in sorted(sws):
        lines.append("sw %d A %d.%d B %d.%d %d.%d" % (sid, a[0] + 1, a[1], b0[0] + 1, b0[1], b1[0] + 1, b1[1]))
    bare = pyttk.Track.parse("\n".join(lines) + "\n")
    # old punctured regions other than the opened ones keep their marks
    old_marks = []
    for i, (bd, cusps, punct) in enumerate(regions):
        if punct and i not in monogons:
            old_marks.append(set(b for b, _ in bd))
    marks = []
    for bd, cusps, _ in bare.regions():
        bs = set(b for b, _ in bd)
        hit = False
        for om in old_marks:
            if bs == om or (bs - set(range(sigma0.branches, p))) == om:
                hit = True
        for g, a in zip(info["gamma"], info["arc"]):
            if bs == {a, g[1]} or bs == {a, g[0], g[2]}:
                hit = True
        if hit:
            b, s = bd[0]
            marks.append("punct %d.0 %s" % (b + 1, s))
    text = "\n".join(lines + marks) + "\n"
    return pyttk.Track.parse(text), info
