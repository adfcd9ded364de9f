#!/usr/bin/env python3
# Copyright 2026 The systole Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the bundled graph and map datasets under data/.

Regular orientable maps are built as coset maps of a finite group G with
generators x (order 2) and y (order 3): darts are the elements of G,
alpha(g) = g*x and sigma(g) = g*y, so faces have length ord(x*y).
The projective Petersen map is found by searching signed rotation systems.

Usage: gen_datasets.py OUTDIR
"""

import itertools
import sys
from fractions import Fraction
from pathlib import Path

HEADER = "# generated by tools/gen_datasets.py; do not edit\n"


# ---------------------------------------------------------------- groups

def perm_mul(a, b):
    """a then b (right action)."""
    return tuple(b[a[i]] for i in range(len(a)))


def closure(gens, mul, identity):
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                k = mul(g, h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return seen


def order(g, mul, identity):
    k, h = 1, g
    while h != identity:
        h = mul(h, g)
        k += 1
    return k


def find_generators(elements, mul, identity, face_len, group_order):
    elems = sorted(elements)
    for x in elems:
        if order(x, mul, identity) != 2:
            continue
        for y in elems:
            if order(y, mul, identity) != 3:
                continue
            if order(mul(x, y), mul, identity) != face_len:
                continue
            if len(closure([x, y], mul, identity)) == group_order:
                return x, y
    raise RuntimeError("no generating pair")


def symmetric_group(n):
    return set(itertools.permutations(range(n)))


def parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def psl27():
    q = 7
    mats = set()
    for a, b, c, d in itertools.product(range(q), repeat=4):
        if (a * d - b * c) % q == 1:
            mats.add(canon_pm((a, b, c, d), q))
    return mats


def canon_pm(m, q):
    neg = tuple((-v) % q for v in m)
    return min(m, neg)


def mat_mul_mod(q):
    def mul(m, n):
        a, b, c, d = m
        e, f, g, h = n
        r = ((a * e + b * g) % q, (a * f + b * h) % q,
             (c * e + d * g) % q, (c * f + d * h) % q)
        return canon_pm(r, q)
    return mul


def affine_group(q):
    # t -> a t + b, stored (a, b)
    return {(a, b) for a in range(1, q) for b in range(q)}


def affine_mul(q):
    def mul(m, n):
        # apply m then n: t -> n.a (m.a t + m.b) + n.b
        a1, b1 = m
        a2, b2 = n
        return ((a2 * a1) % q, (a2 * b1 + b2) % q)
    return mul


def coset_map(elements, mul, x, y):
    elems = sorted(elements)
    index = {g: i for i, g in enumerate(elems)}
    alpha = [index[mul(g, x)] for g in elems]
    sigma = [index[mul(g, y)] for g in elems]
    return alpha, sigma


# ---------------------------------------------------------------- maps

def map_from_permutations(alpha, sigma):
    """Returns (num_vertices, edges [(u, v)], rotations [[(edge, end)]])."""
    n = len(alpha)
    vertex_of = [-1] * n
    rotations = []
    for d in range(n):
        if vertex_of[d] >= 0:
            continue
        v = len(rotations)
        rot = []
        e = d
        while vertex_of[e] < 0:
            vertex_of[e] = v
            rot.append(e)
            e = sigma[e]
        rotations.append(rot)
    dart_name = {}
    edges = []
    for d in range(n):
        if d in dart_name:
            continue
        eid = len(edges)
        dart_name[d] = (eid, 0)
        dart_name[alpha[d]] = (eid, 1)
        edges.append((vertex_of[d], vertex_of[alpha[d]]))
    named = [[dart_name[d] for d in rot] for rot in rotations]
    return len(rotations), edges, named


def faces_signed(num_vertices, edges, rotations, twisted):
    """Face walks of a signed rotation system (flag orbits under r0, r1)."""
    darts = [(e, k) for e in range(len(edges)) for k in (0, 1)]
    pos = {}
    for rot in rotations:
        for i, d in enumerate(rot):
            pos[d] = (rot, i)

    def sigma(d, step):
        rot, i = pos[d]
        return rot[(i + step) % len(rot)]

    def r0(f):
        (e, k), s = f
        return ((e, 1 - k), s ^ 1 ^ (1 if e in twisted else 0))

    def r1(f):
        d, s = f
        return (sigma(d, 1), 1) if s == 0 else (sigma(d, -1), 0)

    seen = set()
    faces = []
    for d in darts:
        for s in (0, 1):
            f = (d, s)
            if f in seen:
                continue
            length = 0
            g = f
            while True:
                seen.add(g)
                g = r0(g)
                seen.add(g)
                g = r1(g)
                length += 1
                if g == f:
                    break
            faces.append(length)
    return faces


def write_map(path, name, num_vertices, edges, rotations, twisted=(), comment=""):
    lines = [HEADER.rstrip("\n")]
    if comment:
        lines.append("# " + comment)
    lines.append(f"graph {name}")
    lines.append(f"vertices {num_vertices}")
    for eid, (u, v) in enumerate(edges):
        lines.append(f"edge {eid} {u} {v} 1/1")
    for v, rot in enumerate(rotations):
        darts = " ".join(f"{e}.{k}" for e, k in rot)
        lines.append(f"rotation {v}: {darts}")
    if twisted:
        lines.append("twist " + " ".join(str(e) for e in sorted(twisted)))
    path.write_text("\n".join(lines) + "\n")


def write_graph(path, name, num_vertices, edges, comment=""):
    lines = [HEADER.rstrip("\n")]
    if comment:
        lines.append("# " + comment)
    lines.append(f"graph {name}")
    lines.append(f"vertices {num_vertices}")
    for eid, (u, v, length) in enumerate(edges):
        lines.append(f"edge {eid} {u} {v} {length.numerator}/{length.denominator}")
    path.write_text("\n".join(lines) + "\n")


def write_props(path, props):
    lines = [HEADER.rstrip("\n")]
    for key, value in props:
        lines.append(f"{key} {value}")
    path.write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------- cycles

def girth_and_count(num_vertices, edges):
    """Unit-weight girth and the number of girth cycles (simple graphs only)."""
    adj = [[] for _ in range(num_vertices)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    best = None
    found = set()
    for bound in range(3, num_vertices + 1):
        found.clear()
        for start in range(num_vertices):
            stack = [(start, [start], [])]
            while stack:
                v, path, used = stack.pop()
                if len(used) == bound:
                    continue
                for w, eid in adj[v]:
                    if eid in used:
                        continue
                    if w == start and len(used) + 1 == bound:
                        found.add(frozenset(used + [eid]))
                    elif w not in path and w > start:
                        stack.append((w, path + [w], used + [eid]))
        if found:
            best = bound
            break
    return best, len(found)


# ---------------------------------------------------------------- main

def regular_map(name, elements, mul, identity, p, outdir, comment, reflexible=True):
    x, y = find_generators(elements, mul, identity, p, len(elements))
    alpha, sigma = coset_map(elements, mul, x, y)
    nv, edges, rotations = map_from_permutations(alpha, sigma)
    faces = faces_signed(nv, edges, rotations, set())
    assert all(f == p for f in faces), faces
    assert len(faces) * p == 2 * len(edges)
    write_map(outdir / f"{name}.map", name, nv, edges, rotations, comment=comment)
    girth, count = girth_and_count(nv, edges)
    write_props(outdir / f"{name}.props", [
        ("kind", "map"), ("V", nv), ("E", len(edges)), ("F", len(faces)),
        ("p", p), ("q", 3), ("girth", girth), ("girth_cycles", count),
        ("orientable", "true"),
        ("flag_transitive", "true" if reflexible else "false"),
    ])
    print(f"{name}: V={nv} E={len(edges)} F={len(faces)} girth={girth} "
          f"girth_cycles={count}")


def petersen_projective(outdir):
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
    for i in range(5):
        edges.append((i, i + 5))
    for i in range(5):
        edges.append((5 + i, 5 + (i + 2) % 5))
    darts_at = [[] for _ in range(10)]
    for eid, (u, v) in enumerate(edges):
        darts_at[u].append((eid, 0))
        darts_at[v].append((eid, 1))
    # outer cycle plus spokes form a spanning tree after dropping edge 4;
    # twists on tree edges can be switched away.
    tree = {0, 1, 2, 3, 5, 6, 7, 8, 9}
    cotree = [e for e in range(15) if e not in tree]
    for rot_bits in range(1 << 10):
        rotations = []
        for v in range(10):
            a, b, c = darts_at[v]
            rotations.append([a, b, c] if not (rot_bits >> v) & 1 else [a, c, b])
        for tw_bits in range(1 << len(cotree)):
            twisted = {cotree[i] for i in range(len(cotree)) if (tw_bits >> i) & 1}
            faces = faces_signed(10, edges, rotations, twisted)
            if len(faces) == 6 and all(f == 5 for f in faces):
                write_map(outdir / "petersen_projective.map", "petersen_projective",
                          10, edges, rotations, twisted,
                          comment="Petersen graph on the projective plane (hemi-dodecahedron)")
                girth, count = girth_and_count(10, edges)
                write_props(outdir / "petersen_projective.props", [
                    ("kind", "map"), ("V", 10), ("E", 15), ("F", 6), ("p", 5),
                    ("q", 3), ("girth", girth), ("girth_cycles", count),
                    ("orientable", "false"), ("flag_transitive", "true"),
                ])
                print(f"petersen_projective: twists={sorted(twisted)} girth={girth} "
                      f"girth_cycles={count}")
                return
    raise RuntimeError("no projective embedding found")


def graphs(outdir):
    third = Fraction(1, 3)
    specs = {
        "theta": (2, [(0, 1, third)] * 3, "three parallel edges of equal length"),
        "dumbbell_equal": (2, [(0, 0, third), (1, 1, third), (0, 1, third)],
                           "two equal loops joined by a bar"),
        "dumbbell_unequal": (2, [(0, 0, Fraction(1, 4)), (1, 1, Fraction(5, 12)),
                                 (0, 1, third)], "loops 1/4 and 5/12, bar 1/3"),
        "rose2": (1, [(0, 0, Fraction(1, 2))] * 2, "two petals of length 1/2"),
    }
    for name, (nv, edges, comment) in specs.items():
        write_graph(outdir / f"{name}.graph", name, nv, edges, comment)
        rank = len(edges) - nv + 1
        write_props(outdir / f"{name}.props", [
            ("kind", "graph"), ("V", nv), ("E", len(edges)), ("rank", rank),
        ])


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    outdir.mkdir(parents=True, exist_ok=True)
    graphs(outdir)

    s4 = symmetric_group(4)
    a4 = {p for p in s4 if parity(p) == 0}
    ident4 = tuple(range(4))
    regular_map("tetrahedron", a4, perm_mul, ident4, 3, outdir,
                "K4 on the sphere, rotation group A4")
    regular_map("cube", s4, perm_mul, ident4, 4, outdir,
                "cube on the sphere, rotation group S4")
    regular_map("heawood_torus", affine_group(7), affine_mul(7), (1, 0), 6, outdir,
                "Heawood graph on the torus, rotation group AGL(1,7); chiral",
                reflexible=False)
    regular_map("klein_73", psl27(), mat_mul_mod(7), (1, 0, 0, 1), 7, outdir,
                "Klein quartic map of type {7,3}, rotation group PSL(2,7)")
    petersen_projective(outdir)


if __name__ == "__main__":
    main()
