"""The point-vortex starting state."""
import gsqgpatch


def trivial_state(geometry, mode, order):
    """
    Point-vortex solution at ``eps = 0``.

    Args:
        geometry (gsqgpatch.PairGeometry):
            Pair parameters.
        mode (str):
            Either "corotating" or "traveling".
        order (int):
            Truncation order of the (zero) perturbations.

    Returns:
        (gsqgpatch.SolveState):
            ``(Omega*, xbar*, 0, 0)`` or ``(U*, gamma1, 0, 0)``.

    Examples:
        >>> geometry = gsqgpatch.PairGeometry(alpha=1.0, gamma1=2.0, d=6.0)
        >>> state = gsqgpatch.trivial_state(geometry, "corotating", 4)
        >>> round(state.scalar1, 12), round(state.scalar2, 12)
        (0.006944444444, 2.0)
        >>> gsqgpatch.trivial_state(geometry, "traveling", 4).scalar2
        2.0

    """
    gsqgpatch.check_geometry(geometry, mode)
    zero = gsqgpatch.CosineSeries.zeros(order)
    if mode == "corotating":
        return gsqgpatch.SolveState(
            mode, gsqgpatch.omega_star(geometry), gsqgpatch.xbar_star(geometry),
            zero, zero)
    assert mode == "traveling", mode
    return gsqgpatch.SolveState(
        mode, gsqgpatch.u_star(geometry), float(geometry.gamma1), zero, zero)
