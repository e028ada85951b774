"""Raise the connectivity of a lopsided orientation, step by step.

We take a triangle with every edge doubled and point every arc the same
way around, which leaves a vertex with no way out (connectivity 0), then
watch the augmentation raise it to 2 one hyperarc at a time.
"""

import hyperorient as ho

h = ho.hypergraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])
o = ho.Orientation(h, (1, 1, 2, 2, 2, 2))

print("instance:", h)
print("start heads:", o.heads)
print("start connectivity:", ho.hyperarc_connectivity(h, o))
print()

events = []
trace = ho.augment_to(h, o, 2, observer=events.append)

print(f"reached connectivity {trace.lambda_final} in {len(trace.steps)} steps:")
for i, step in enumerate(trace.steps, start=1):
    print(
        f"  step {i}: edge {step.edge} head {step.old_head} -> {step.new_head}"
        f"   connectivity now {step.lambda_after}"
    )
print()

print("admissible paths used:")
for ev in events:
    seq = ho.trim(h, ev.result.path)
    print(
        f"  level {ev.level}, region {sorted(ev.region)} ({ev.branch}): "
        f"path {' -> '.join(map(str, seq))}"
    )
print()

report = ho.verify_trace(h, trace)
print("independent verifier says:", report.render())

# the trace survives a round trip through its text format
text = ho.format_trace(trace)
assert ho.parse_trace(text, o) == trace
print()
print("trace file:")
print(text, end="")
