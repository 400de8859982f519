# %% [markdown]
# # Three reference cases
#
# Each case is classified with the rotation reduction, the shearing
# reduction and the slow subdivision oracle. Angles are (polar, azimuth).

# %%
import math

from spip import oracle, rotation, shearing
from spip.fixtures import FIXTURES

# %%
for fx in FIXTURES:
    g, q = fx.polygon, fx.point_angles
    print(f"{fx.name}: {fx.description}")
    print(f"  Q = (theta {math.degrees(q.theta):.1f} deg, phi {math.degrees(q.phi):.1f} deg), "
          f"{len(g)} vertices")
    print("  rotation :", rotation.classify(g, q))
    print("  shearing :", shearing.classify(g, q))
    print("  oracle   :", oracle.classify_by_subdivision(g, q))
    print("  expected :", fx.expected)

# %% [markdown]
# In the first case the query point is the north pole and the south pole is
# a vertex. The planar test finds the origin on side 1. The chord midpoint
# of that side lies below the equator, so the hit belongs to -Q and Q is
# exterior. No winding number is computed on that branch.
#
# In the second case side 3 runs over the pole and its chord midpoint is
# above the equator, so Q itself is on the boundary.
#
# The third polygon visits v1 twice and traces two diamonds that both
# surround Q with the same orientation, so the winding number is 2.
