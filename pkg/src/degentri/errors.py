"""Exception types shared by every module."""

from __future__ import annotations

from typing import Any


class DegentriError(Exception):
    """Base class for all library errors."""


class InputError(DegentriError):
    """Malformed input: wrong shapes, unknown names, unresolvable references."""


class LawViolation(DegentriError):
    """A structure fails one of its axioms.

    ``law`` names the failed axiom and ``witness`` holds the indices that
    exhibit the failure, so reports can print both.
    """

    def __init__(self, law: str, witness: Any = None, detail: str = ""):
        self.law = law
        self.witness = witness
        self.detail = detail
        msg = law if witness is None else f"{law} at {witness!r}"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class InternalConsistencyError(DegentriError):
    """A conclusion that must follow from validated input did not hold."""
