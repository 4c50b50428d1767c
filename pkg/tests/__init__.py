"""Tests for wallcross."""
