"""Tests for the catalog of composite sequences."""
