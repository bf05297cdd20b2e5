"""Reproducible names of output files."""
import hashlib
import json


def schedule_hash(schedule):
    """
    Short digest identifying an eps schedule.

    Examples:
        >>> gsqgpatch.schedule_hash([0.0, 0.01]) == gsqgpatch.schedule_hash((0, 0.01))
        True
        >>> len(gsqgpatch.schedule_hash([0.0]))
        12

    """
    text = json.dumps([float(eps) for eps in schedule])
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:12]


def artifact_name(mode, alpha, eps, suffix):
    """
    File name ``<mode>_<alpha>_<eps>.<suffix>`` of a per-state artifact.

    Examples:
        >>> gsqgpatch.artifact_name("corotating", 1.5, -0.02, "csv")
        'corotating_1.5_-0.02.csv'

    """
    return "%s_%r_%r.%s" % (mode, float(alpha), float(eps), suffix)


def branch_name(mode, alpha, schedule, suffix="json"):
    """
    File name of a branch level artifact, carrying the schedule hash.

    Examples:
        >>> gsqgpatch.branch_name("traveling", 1.0, [0.0]).startswith("traveling_1.0_")
        True

    """
    return "%s_%r_%s.%s" % (mode, float(alpha), schedule_hash(schedule), suffix)
