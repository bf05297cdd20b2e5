"""JSON persistence of solution branches."""
import dataclasses
import json

import gsqgpatch

FORMAT = "gsqgpatch-branch"
VERSION = 1


def branch_to_dict(branch):
    """
    Plain dictionary representation of a branch.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0)
        >>> config = gsqgpatch.SolverConfig(order=4, grid_size=16)
        >>> branch = gsqgpatch.continue_branch(geometry, "corotating", config)
        >>> sorted(gsqgpatch.branch_to_dict(branch))  # doctest: +NORMALIZE_WHITESPACE
        ['entries', 'format', 'geometry', 'grid_size', 'mode', 'scaling_exponent',
         'status', 'tol_residual', 'version']

    """
    return {
        "format": FORMAT,
        "version": VERSION,
        "mode": branch.mode,
        "geometry": dataclasses.asdict(branch.geometry),
        "grid_size": branch.grid_size,
        "tol_residual": branch.tol_residual,
        "status": branch.status,
        "scaling_exponent": branch.scaling_exponent,
        "entries": [{
            "eps": entry.eps,
            "scalar1": entry.state.scalar1,
            "scalar2": entry.state.scalar2,
            "p1": entry.state.p1.coeffs.tolist(),
            "p2": entry.state.p2.coeffs.tolist(),
            "diagnostics": entry.diagnostics.to_dict(),
        } for entry in branch.entries],
    }


def branch_from_dict(values):
    """Inverse of `branch_to_dict`."""
    if values.get("format") != FORMAT or values.get("version") != VERSION:
        raise ValueError("not a %s document of version %d" % (FORMAT, VERSION))
    mode = values["mode"]
    entries = tuple(gsqgpatch.BranchEntry(
        eps=entry["eps"],
        state=gsqgpatch.SolveState(
            mode, entry["scalar1"], entry["scalar2"],
            gsqgpatch.CosineSeries(entry["p1"]), gsqgpatch.CosineSeries(entry["p2"])),
        diagnostics=gsqgpatch.Diagnostics.from_dict(entry["diagnostics"]),
    ) for entry in values["entries"])
    return gsqgpatch.SolutionBranch(
        geometry=gsqgpatch.PairGeometry(**values["geometry"]),
        mode=mode,
        entries=entries,
        grid_size=values["grid_size"],
        tol_residual=values["tol_residual"],
        status=values["status"],
        scaling_exponent=values["scaling_exponent"],
    )


def dump_branch(branch):
    """
    Serialize a branch to JSON text.

    Floats are written in their shortest round-trip form, so loading and
    dumping again reproduces the text byte for byte.
    """
    return json.dumps(branch_to_dict(branch), indent=2, sort_keys=True)+"\n"


def load_branch(text):
    """Inverse of `dump_branch`."""
    return branch_from_dict(json.loads(text))


def save_branch(branch, path):
    """Write `dump_branch` output to a file."""
    with open(path, "w", encoding="utf-8") as dst:
        dst.write(dump_branch(branch))


def read_branch(path):
    """Read a branch written by `save_branch`."""
    with open(path, encoding="utf-8") as src:
        return load_branch(src.read())
