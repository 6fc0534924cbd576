"""Tests for prism-covers."""
