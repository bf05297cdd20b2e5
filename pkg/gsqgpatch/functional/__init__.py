"""Residual functionals of co-rotating and traveling pairs."""
from .common import circulations
from .point_vortex import omega_star, xbar_star, u_star
from .rotation import eval_F_i1
from .translation import eval_G_i1
from .self_term import eval_F_i2, self_interaction, source_samples
from .cross_term import eval_F_i3, cross_interaction, cross_strain_coefficient
from .assemble import assemble_F, assemble_G, assemble, ASSEMBLERS
