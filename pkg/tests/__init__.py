"""meadowlog test suite."""
