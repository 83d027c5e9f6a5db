import pytest

from scripts.run_acceptance import CHECKS

pytestmark = pytest.mark.slow


@pytest.mark.parametrize(("code", "title", "check"), CHECKS, ids=[code for code, _, _ in CHECKS])
def test_acceptance(code, title, check):
    ok, detail = check()
    assert ok, f"{code} {title}: {detail}"
