"""Helpers for fanning pure functions out over worker pools."""
