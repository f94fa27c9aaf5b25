"""Acceptance gate: every criterion of the regression/property suite must
pass.  Each test prints exactly one PASS/FAIL line for its criterion."""

import pytest

from sccc.acceptance import CRITERIA, DEFAULT_SEED


@pytest.mark.parametrize(
    "number,name,fn",
    [(i, name, fn) for i, (name, fn) in enumerate(CRITERIA, start=1)],
    ids=[f"{i:02d}-{name.replace(' ', '-')}" for i, (name, _) in enumerate(CRITERIA, start=1)],
)
def test_criterion(number, name, fn, capsys):
    try:
        ok, detail = fn(DEFAULT_SEED)
    except Exception as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    with capsys.disabled():
        print(f"criterion {number} ({name}): {'PASS' if ok else 'FAIL'} -- {detail}")
    assert ok, f"criterion {number} ({name}) failed: {detail}"
