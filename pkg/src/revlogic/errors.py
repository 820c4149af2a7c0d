"""Shared exception base for the revlogic package."""


class RevLogicError(Exception):
    """Base class for all errors raised by revlogic."""
