"""Shared store for per-criterion summary lines."""

RESULTS: dict[int, str] = {}
