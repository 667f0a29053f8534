"""From 3-coloring to orthogonality dimension and back.

Each vertex v of the cover is tied to every palette vertex z_i by a copy of
the complement of C_6, which forces u_v to be parallel or perpendicular to
u_{z_i}. So G is 3-colorable exactly when the glued graph has a
3-dimensional orthogonal representation, and a representation hands back a
coloring.
"""
from orthodim import GF2, GF3, col_to_od_path, col_to_od_vc, decide_od, extract_coloring_from_orthrep
from orthodim.graph import complete_graph, cycle_graph, min_vertex_cover

for name, g in [("C5", cycle_graph(5)), ("K4", complete_graph(4))]:
    x = sorted(min_vertex_cover(g, g.n))
    out = col_to_od_vc(g, x, 3)
    print(f"{name}: cover {x}; G' has {out.graph.n} vertices, modulator {len(out.modulator)}")
    for f in (GF2, GF3):
        ok, rep = decide_od(out.graph, 3, f)
        print(f"  od_{f.name}(G') <= 3: {ok}")
        if ok:
            print(f"  recovered coloring: {extract_coloring_from_orthrep(out, rep)}")

# the path variant: C5 is the path 0-1-2-3 plus an apex
out = col_to_od_path(cycle_graph(5), [4])
ok, rep = decide_od(out.graph, 3, GF2)
print(f"path variant on C5: od <= 3 is {ok}; coloring {extract_coloring_from_orthrep(out, rep)}")
