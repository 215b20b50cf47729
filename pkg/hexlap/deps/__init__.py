"""Shared command dependencies."""
