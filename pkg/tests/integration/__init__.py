"""Integration tests for prism-covers."""
