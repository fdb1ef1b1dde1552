"""Tests for the propagators."""
