"""Unit tests for prism-covers."""
