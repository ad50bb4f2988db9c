"""Keeps this directory importable so tests can share the oracles module."""
