# %% [markdown]
# # What the two projections look like
#
# The rotation reduction turns Q into the north pole and drops z. The
# shearing reduction shears along the coordinate axis closest to Q and
# drops that coordinate. The planar polygons differ, but both wind around
# the origin the same number of times.

# %%
import numpy as np

from spip import rotation, shearing, svg
from spip.fixtures import DOUBLE_DIAMOND
from spip.planar import angle_sum_wn, classify_origin

g, q = DOUBLE_DIAMOND.polygon, DOUBLE_DIAMOND.point_angles

rot = rotation.rotation_to_north(q)
by_rotation = rotation.project(g, rot)[:, :2]
plan = shearing.plan_shear(q)
by_shearing = shearing.shear_project(g, q, plan)

np.set_printoptions(precision=4, suppress=True)
print("shear plan:", plan.axis.name, "positive" if plan.positive else "negative", plan.coefficients)
print("rotated, z dropped:\n", by_rotation)
print("sheared and projected:\n", by_shearing)

# %%
for name, planar in (("rotation", by_rotation), ("shearing", by_shearing)):
    print(name, classify_origin(planar), "angle sum wn =", angle_sum_wn(planar))

# %% [markdown]
# Write both curves to an SVG for a look. The origin is the black dot.

# %%
with open("double_diamond.svg", "w") as fh:
    fh.write(svg.render([("double diamond", {"rotation": by_rotation, "shearing": by_shearing})]))
