"""Tests for the raman-cp package."""
