"""Follow one graph through the three construction stages.

The first part uses a triangulation with a planted b-vertex triangle so the
configuration stage has something to do.  The second part starts from a
stalled seed set on a nested graph and lets the splitting recursion finish.
"""

from powerdom.generators import facial_triakis, nested_cores
from powerdom.monitor import monitor
from powerdom.solver import RecursionNode, algorithm1, algorithm2, algorithm3

g = facial_triakis(12, 3)
sel = algorithm1(g)
print(f"n={g.n}, configurations found: {[c.config_type for c in sel.configs]}")
for u in sel.S1:
    print(f"  seed {u} labels {sorted(sel.labels_of(u))}")
added = algorithm2(g, sel.state)
print(f"  greedy added {added}, complete={sel.state.is_complete()}")

g, seeds = nested_cores(3)
state = monitor(g, seeds)
print(f"\nnested graph n={g.n}, hand seeds {list(seeds)} leave {len(state.unmonitored)} vertices dark")
nodes: list[RecursionNode] = []
extra = algorithm3(g, state, nodes=nodes)
for node in sorted(nodes, key=lambda x: x.depth):
    print(f"  depth {node.depth}: region of {node.region_size}, template {node.template}, added {node.added}")
print(f"  recursion added {extra}, complete={state.is_complete()}")
