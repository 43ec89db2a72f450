"""Module integration tests."""
