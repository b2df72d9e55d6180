"""Errors, settings and exact-number parsing."""
