# %% [markdown]
# # Batch jobs
#
# A job is a JSON-lines document of polygons and query points. Every point
# is classified against every polygon. The rotation matrix and shear plan
# for a point are built once and reused for all polygons.
#
# The same thing from the shell:
#
#     spip classify --input notebooks/data/reference_cases.jsonl --verify
#     spip validate --input notebooks/data/reference_cases.jsonl
#     spip fixtures

# %%
from pathlib import Path

from spip.jobs import emit_job, parse_input, run

path = Path(__file__).parent / "data" / "reference_cases.jsonl"
job = parse_input(path)
print(len(job.polygons), "polygons,", len(job.points), "points, method", job.method)

# %%
result = run(job)
for r in result.records:
    print(f"{r.point_id:>11} {r.polygon_id:>10} {r.method:>9}: {r.outcome:<9} "
          f"wn={r.wn} edge={r.edge_index} verified={r.verified}")
print("exit code", result.exit_code)

# %% [markdown]
# Jobs serialize back to the same document format.

# %%
print(emit_job(job))
