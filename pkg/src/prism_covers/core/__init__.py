"""Core functionality for prism-covers."""
