"""rspac test suite."""
