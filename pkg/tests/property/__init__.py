"""Property-based tests for meadowlog."""
