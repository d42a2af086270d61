"""Shared list of acceptance result lines, printed at the end of the run."""

LINES: list[str] = []
