"""Validation of collocation grids."""


class GridError(ValueError):
    """Error related to an unusable collocation grid."""


def check_grid(grid):
    """
    Make sure the grid resolves products of series of the given order.

    Args:
        grid (gsqgpatch.CollocationGrid):
            Grid to validate.

    Raises:
        GridError:
            If the size is odd or smaller than four times the order.

    Examples:
        >>> gsqgpatch.CollocationGrid(size=30, order=8)
        Traceback (most recent call last):
            ...
        gsqgpatch.construct.grid.GridError: grid size M >= 4N required; found M=30, N=8

    """
    if grid.order < 1:
        raise GridError("order N >= 1 required; found %d" % grid.order)
    if grid.size % 2:
        raise GridError("even grid size required; found %d" % grid.size)
    if grid.size < 4*grid.order:
        raise GridError("grid size M >= 4N required; found M=%d, N=%d" % (
            grid.size, grid.order))
