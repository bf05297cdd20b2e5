"""Helpers shared by the residual terms."""


def circulations(state, geometry):
    """
    Vorticity magnitudes ``(gamma1, gamma2)`` in effect for a state.

    In traveling mode ``gamma2`` is an unknown carried by ``state.scalar2``;
    the value stored on the geometry is ignored.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma2=5.0)
        >>> zero = gsqgpatch.CosineSeries.zeros(2)
        >>> state = gsqgpatch.SolveState("traveling", 0.1, 1.5, zero, zero)
        >>> gsqgpatch.circulations(state, geometry)
        (1.0, 1.5)
        >>> gsqgpatch.circulations(state.replace(mode="corotating"), geometry)
        (1.0, 5.0)

    """
    if state.mode == "traveling":
        return float(geometry.gamma1), float(state.scalar2)
    return float(geometry.gamma1), float(geometry.gamma2)
