"""Grid sampling and mesh export (Wavefront OBJ + CSV samples).

Symbolic patches are evaluated exactly and converted to floats; analytic
patches use their numeric evaluators.  Grid points within the skip radius
of a singularity are dropped, and only cells with all four corners present
are triangulated.
"""

from __future__ import annotations

import csv
import math
from fractions import Fraction

from .tfsurface import AnalyticTFPatch


def sample_grid(patch, rect=((-1.0, 1.0), (-1.0, 1.0)), nu=20, nv=20,
                skip_radius=1e-3):
    """Vertex grid [(u, v, (x, y, z)) or None] row-major, plus skip count."""
    if nu < 2 or nv < 2:
        raise ValueError("mesh grids need at least 2 samples per direction")
    (u0, u1), (v0, v1) = rect
    rows = []
    skipped = 0
    for i in range(nu):
        row = []
        uu = u0 + (u1 - u0) * i / (nu - 1)
        for jdx in range(nv):
            vv = v0 + (v1 - v0) * jdx / (nv - 1)
            try:
                if isinstance(patch, AnalyticTFPatch):
                    if patch.distance_to_singularity(uu, vv) < skip_radius:
                        skipped += 1
                        row.append(None)
                        continue
                    xyz = patch.eval_float({"u": uu, "v": vv})
                else:
                    pt = {patch.params[0]: Fraction(uu).limit_denominator(10 ** 9),
                          patch.params[1]: Fraction(vv).limit_denominator(10 ** 9)}
                    xyz = patch.eval_float(pt)
            except (ZeroDivisionError, ValueError, OverflowError):
                skipped += 1
                row.append(None)
                continue
            if not all(math.isfinite(c) for c in xyz):
                skipped += 1
                row.append(None)
                continue
            row.append((uu, vv, xyz))
        rows.append(row)
    return rows, skipped


def write_obj(rows, path):
    """Triangulate the sampled grid and write a Wavefront OBJ file."""
    index = {}
    vertices = []
    for i, row in enumerate(rows):
        for jdx, entry in enumerate(row):
            if entry is None:
                continue
            index[(i, jdx)] = len(vertices) + 1
            vertices.append(entry[2])
    faces = []
    for i in range(len(rows) - 1):
        for jdx in range(len(rows[0]) - 1):
            quad = [(i, jdx), (i + 1, jdx), (i + 1, jdx + 1), (i, jdx + 1)]
            if any(q not in index for q in quad):
                continue
            a, b, c, d = (index[q] for q in quad)
            faces.append((a, b, c))
            faces.append((a, c, d))
    with open(path, "w") as fh:
        fh.write("# parametric surface mesh\n")
        for x, y, z in vertices:
            fh.write(f"v {x:.12g} {y:.12g} {z:.12g}\n")
        for a, b, c in faces:
            fh.write(f"f {a} {b} {c}\n")
    return len(vertices), len(faces)


def write_csv(rows, path):
    count = 0
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "x", "y", "z"])
        for row in rows:
            for entry in row:
                if entry is None:
                    continue
                uu, vv, (x, y, z) = entry
                writer.writerow([f"{uu:.12g}", f"{vv:.12g}",
                                 f"{x:.12g}", f"{y:.12g}", f"{z:.12g}"])
                count += 1
    return count
