"""Orientation existence equals partition-connectivity, at desk scale.

A hypergraph has a k-hyperarc-connected orientation exactly when every
partition of its vertices into t >= 2 classes is crossed by at least k*t
hyperedges.  We check the equivalence by exhaustive search on a few small
hypergraphs, including the classic boundary case: two identical triples
are 2-hyperedge-connected but not (1,1)-partition-connected.
"""

import hyperorient as ho

cases = [
    ("two identical triples", ho.hypergraph(3, [(0, 1, 2), (0, 1, 2)])),
    ("triangle", ho.hypergraph(3, [(0, 1), (1, 2), (0, 2)])),
    ("doubled triangle", ho.hypergraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])),
    ("generated n=5 k=2", ho.gen_instance(ho.GenSpec(n=5, k=2, seed=3))),
]

for name, h in cases:
    print(f"{name}: {h}")
    for k in (1, 2):
        connected, witness_partition = ho.bf_partition_connected(h, k)
        exists, witness_orientation = ho.bf_orientation_exists(h, k)
        assert connected == exists
        verdict = "yes" if exists else "no"
        print(f"  ({k},{k})-partition-connected and {k}-orientable: {verdict}")
        if witness_partition is not None:
            print(f"    violating partition: {witness_partition}")
        if witness_orientation is not None:
            lam = ho.bf_lambda(h, witness_orientation)
            print(f"    witness orientation heads {witness_orientation.heads} (connectivity {lam})")
    print()

print("both sides always agreed")
