"""Boundary coordinates in the physical plane."""
import csv

import numpy

import gsqgpatch

HEADER = ("patch", "x", "X", "Y")


def boundary_points(state, geometry, patch_index, grid):
    """
    Physical boundary points ``X + iY`` of a patch.

    Patch 1 is ``eps b1 R1(x) e^{ix}``, patch 2 the reflected and shifted
    curve ``d - eps b2 R2(x) e^{ix}``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, eps=0.1)
        >>> grid = gsqgpatch.CollocationGrid(size=4, order=1)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 1)
        >>> points = gsqgpatch.boundary_points(state, geometry, 2, grid)
        >>> bool(numpy.allclose(points, [9.9, 10-0.1j, 10.1, 10+0.1j]))
        True

    """
    radius = gsqgpatch.radius_profile(
        state.perturbation(patch_index), geometry, patch_index, grid)
    curve = geometry.eps*geometry.scale(patch_index)*radius*numpy.exp(1j*grid.points)
    if patch_index == 1:
        return curve
    return geometry.d-curve


def write_boundary_csv(state, geometry, grid, path):
    """
    Write both boundaries as CSV rows ``patch, x, X, Y``.

    Values carry 12 significant digits.

    Args:
        state (gsqgpatch.SolveState):
            Converged state.
        geometry (gsqgpatch.PairGeometry):
            Pair parameters with the state's ``eps``.
        grid (gsqgpatch.CollocationGrid):
            Parameter values to write.
        path (str, os.PathLike):
            Destination file.

    """
    with open(path, "w", newline="", encoding="utf-8") as dst:
        writer = csv.writer(dst)
        writer.writerow(HEADER)
        for index in (1, 2):
            points = boundary_points(state, geometry, index, grid)
            for x, point in zip(grid.points, points):
                writer.writerow([index]+["%.12g" % value for value in (
                    x, point.real, point.imag)])


def read_boundary_csv(path):
    """
    Read a file written by `write_boundary_csv`.

    Returns:
        (Dict[int, numpy.ndarray]):
            Per patch an array of rows ``(x, X, Y)``.

    """
    rows = {1: [], 2: []}
    with open(path, newline="", encoding="utf-8") as src:
        reader = csv.reader(src)
        header = next(reader)
        if tuple(header) != HEADER:
            raise ValueError("unexpected boundary header %s" % (header,))
        for patch, *values in reader:
            rows[int(patch)].append([float(value) for value in values])
    return {index: numpy.array(values).reshape(-1, 3) for index, values in rows.items()}


def recover_radius(rows, geometry, patch_index):
    """``R_i`` at the written points, from the physical coordinates."""
    points = rows[:, 1]+1j*rows[:, 2]
    if patch_index == 2:
        points = geometry.d-points
    return numpy.abs(points)/(abs(geometry.eps)*geometry.scale(patch_index))
