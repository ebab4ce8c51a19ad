"""One line per acceptance criterion, printed as the checks run.

Each criterion is a named check from ``bruric.verify``; the same checks
back ``bruric verify``. A failing check here means the computed value
disagrees with the published one.
"""

import pytest

from bruric import verify


@pytest.mark.parametrize("name", [key for key, *_ in verify.CHECKS])
def test_criterion(name, capsys):
    result = verify.run_check(name)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
