"""Command-line interface for prism-covers."""
