"""Configuration parsing and file formats."""
from .config import (
    RunConfig, ConfigError, DEFAULTS, parse_config, load_config)
from .branch import (
    branch_to_dict, branch_from_dict, dump_branch, load_branch, save_branch,
    read_branch)
from .boundary import (
    boundary_points, write_boundary_csv, read_boundary_csv, recover_radius)
from .naming import artifact_name, branch_name, schedule_hash
