# Copyright 2026 The symrig Authors
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

"""Writes the bundled fixtures and their partition files."""

import itertools
import json
import os

out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")
os.makedirs(out, exist_ok=True)

def write(path, obj):
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")


def write_parts(path, parts):
    with open(path, "w") as f:
        f.write("[\n" + ",\n".join(" " + json.dumps(p) for p in parts) + "\n]\n")


def dump(name, obj):
    write(os.path.join(out, name + ".json"), obj)
    write_parts(os.path.join(out, name + "-parts.json"), list(obj["partitions"].values())[0])

def E(t, h, g="id"):
    return {"tail": t, "head": h, "gain": g}

fig1b = {
  "name": "fig1b",
  "description": "Two-vertex quotient of a C_3v-symmetric framework with 12 joints and 21 bars.",
  "group": {"kind": "dihedral", "k": 3},
  "vertices": ["1", "2"],
  "edges": [E("2","1"), E("2","1","s"), E("1","1","r^1"), E("1","1","s*r^2")],
  "partitions": {"cover": [[0,1],[2],[3]]},
  "expected": {"covering_vertices": {"value": 12, "source": "stated"},
               "covering_edges": {"value": 21, "source": "stated"},
               "cover_sets": {"value": 8, "source": "stated"}},
}
dump("fig1b", fig1b)

def k5_blocks(arc_gains, link_gain):
    verts, edges = [], []
    names = ["c","r","l","rr","ll"]
    blocks = []
    for i in range(4):
        vs = [n + str(i) for n in names]
        verts += vs
        ids = []
        for a, b in itertools.combinations(vs, 2):
            ids.append(len(edges)); edges.append(E(a, b))
        blocks.append(ids)
    arcs = []
    for i in range(4):
        arcs.append(len(edges)); edges.append(E("rr%d" % i, "ll%d" % i, arc_gains[i]))
    links = []
    for i in range(4):
        links.append(len(edges)); edges.append(E("l%d" % i, "r%d" % ((i + 1) % 4)))
    for a, b in [("c2","c0"),("c3","c1")]:
        links.append(len(edges)); edges.append(E(a, b, link_gain))
    parts = blocks + [[x] for x in arcs + links]
    return verts, edges, parts

v, e, p = k5_blocks(["s"]*4, "s")
dump("fig2a", {
  "name": "fig2a",
  "description": "Four K_5 blocks over C_s joined in a ring; 5- but not 6-mixed-connected covering, not forced-rigid.",
  "group": {"kind": "reflection"},
  "vertices": v, "edges": e,
  "partitions": {"rho": p},
  "expected": {"mixed_connectivity": {"value": 5, "source": "stated"},
               "partition_sum": {"value": 38, "source": "stated"},
               "threshold": {"value": 39, "source": "stated"},
               "forced_rigid": {"value": False, "source": "stated"}},
})

v, e, p = k5_blocks(["s","s","s*r^1","s*r^1"], "r^1")
dump("fig3", {
  "name": "fig3",
  "description": "C_3v analogue of fig2a; 5-mixed-connected covering, not forced-rigid.",
  "group": {"kind": "dihedral", "k": 3},
  "vertices": v, "edges": e,
  "partitions": {"rho": p},
  "expected": {"mixed_connectivity": {"value": 5, "source": "stated"},
               "partition_sum": {"value": 38, "source": "computed"},
               "threshold": {"value": 40, "source": "computed"},
               "forced_rigid": {"value": False, "source": "stated"}},
})

verts = ["x"] + ["y%d" % i for i in range(1, 7)]
edges, parts = [], []
for i in range(1, 7):
    ids = []
    for g in ["r^1", "r^2", "r^3"]:
        ids.append(len(edges)); edges.append(E("y%d" % i, "y%d" % i, g))
    parts.append(ids)
for i in range(1, 7):
    parts.append([len(edges)]); edges.append(E("x", "y%d" % i))
dump("fig2b", {
  "name": "fig2b",
  "description": "Star K_{1,6} over C_6 with three loops at each leaf; 6-mixed-connected covering, not 2-edge-connected, not forced-rigid.",
  "group": {"kind": "cyclic", "k": 6},
  "vertices": verts, "edges": edges,
  "partitions": {"rho": parts},
  "expected": {"mixed_connectivity": {"value": 6, "source": "stated"},
               "edge_connectivity": {"value": 1, "source": "computed"},
               "partition_sum": {"value": 12, "source": "stated"},
               "threshold": {"value": 13, "source": "stated"},
               "forced_rigid": {"value": False, "source": "stated"}},
})

verts, edges, parts = [], [], []
def vn(b, i): return "b%d.%d" % (b, i)
for b in range(1, 7):
    verts += [vn(b, i) for i in range(1, 7)]
    ids = []
    for i, j in itertools.combinations(range(1, 7), 2):
        ids.append(len(edges)); edges.append(E(vn(b, i), vn(b, j)))
    for i, j in [(3, 4), (4, 5)]:
        ids.append(len(edges)); edges.append(E(vn(b, i), vn(b, j), "s"))
    parts.append(ids)
singles = []
for b in range(1, 7):
    nb = b % 6 + 1
    gain = "s" if b == 5 else "id"
    singles.append(len(edges)); edges.append(E(vn(b, 6), vn(nb, 2), gain))
for b in range(1, 4):
    singles.append(len(edges)); edges.append(E(vn(b, 1), vn(b + 3, 1)))
parts += [[x] for x in singles]
dump("fig4", {
  "name": "fig4",
  "description": "Six K_6 blocks over C_s with two s-arcs each; 6-mixed-connected covering, forced-rigid but not rigid for the sign character.",
  "group": {"kind": "reflection"},
  "vertices": verts, "edges": edges,
  "partitions": {"mu": parts},
  "expected": {"mixed_connectivity": {"value": 6, "source": "stated"},
               "partition_sum": {"value": 69, "source": "stated"},
               "threshold": {"value": 70, "source": "stated"},
               "iota1_rigid": {"value": False, "source": "stated"},
               "forced_rigid": {"value": True, "source": "computed"}},
})
for n in ["fig1b","fig2a","fig2b","fig3","fig4"]:
    d = json.load(open(os.path.join(out, n + ".json")))
    print(n, len(d["vertices"]), len(d["edges"]), sum(len(p) for p in list(d["partitions"].values())[0]))
