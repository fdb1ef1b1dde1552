"""Tests for parsing, analysis, sweeps and sequence files."""
