"""
Realizing a torus-bundle monodromy
==================================

A plan is an ordered list of construction steps whose matrices multiply, left
to right, to the target monodromy: at most one Del Pezzo twist (the K6 part),
then quadric transforms (the H2 part).
"""

import json

from gl2surgery import IntMat2, MonodromyPlan, plan_monodromy, verify_plan

# The single-fiber example
plan = plan_monodromy(IntMat2.parse("0,1;1,1"))
for step in plan.steps:
    print(step, step.matrix)
print("verifies:", verify_plan(plan))

# Plans serialize to plain JSON and come back intact
text = json.dumps(plan.to_record(), sort_keys=True)
print(text)
assert MonodromyPlan.from_record(json.loads(text)) == plan

# A larger target
target = IntMat2.parse("13,8;21,13") @ IntMat2.parse("0,1;1,0")
plan = plan_monodromy(target)
print(f"\n{target}: {len(plan.steps)} steps, verifies: {verify_plan(plan)}")
print(" ".join(str(s) for s in plan.steps[:6]), "...")
