"""Tests for the pulse, sequence and target models."""
