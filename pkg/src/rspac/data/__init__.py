"""Bundled data files (rate profiles)."""
