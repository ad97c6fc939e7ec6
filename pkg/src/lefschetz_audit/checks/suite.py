"""Run a selection of checks against an invariant report."""

from typing import Iterable, List, Optional

from ..errors import MismatchedReport
from ..fibration import GroundTruthFlags
from ..invariants import InvariantReport
from ..utils.logger import get_logger
from . import available_checks, get_check
from .base import CheckContext, CheckResult

logger = get_logger(__name__)


def run_checks(rep: InvariantReport,
               g: int,
               h: int,
               flags: Optional[GroundTruthFlags] = None,
               selection: Optional[Iterable[str]] = None) -> List[CheckResult]:
    """
    Evaluate checks, sorted by check id.

    Args:
        rep: Invariant report
        g: Fiber genus the report must have been produced for
        h: Base genus the report must have been produced for
        flags: Ground-truth hypotheses; unknown ones make dependent checks inapplicable
        selection: Check ids to run, all registered checks when None

    Returns:
        One CheckResult per selected check

    Raises:
        MismatchedReport: the report belongs to a different (g, h)
        NotFound: a selected id is not registered
    """
    if (rep.fiber_genus, rep.base_genus) != (g, h):
        raise MismatchedReport(
            f"report is for (g, h) = ({rep.fiber_genus}, {rep.base_genus}), not ({g}, {h})"
        )
    ids = sorted(set(selection)) if selection is not None else available_checks()
    checks = [get_check(check_id) for check_id in ids]
    ctx = CheckContext(report=rep, g=g, h=h, flags=flags or GroundTruthFlags())
    results = [check.run(ctx) for check in checks]
    logger.info(
        "checks_run",
        name=rep.name,
        total=len(results),
        applicable=sum(r.applicable for r in results),
        failed=[r.check_id for r in results if r.failed],
    )
    return results
