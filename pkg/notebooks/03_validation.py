# %% [markdown]
# # Checking polygons before classifying
#
# Both reductions assume the polygon's boundary never meets its own
# antipodal image (BAE). Any polygon whose vertices fit in an open
# hemisphere has that property. `validate` reports both, plus a hemisphere
# pole when one exists.

# %%
import numpy as np

from spip import SphericalPolygon, is_bae, is_hemisphere_contained, validate

octant = SphericalPolygon([[1, 0, 0], [0, 0, -1], [0, 1, 0]])
report = validate(octant)
print("octant:", report.is_bae, report.is_hc, report.hc_witness)

# %% [markdown]
# The closed octant fits in the open hemisphere around (1, 1, -1)/sqrt(3):
# every vertex has dot product 1/sqrt(3) with that pole.

# %%
w = np.array(report.hc_witness)
print(octant.vertices @ w)

# %% [markdown]
# A quadrilateral with two antipodal vertices is not BAE. `is_bae` lists the
# side pairs (i, j) where side i meets the antipode of side j.

# %%
belt = SphericalPolygon([[1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, 0, 1]])
print(is_bae(belt))
print(is_hemisphere_contained(belt))
print(validate(belt).reasons)
