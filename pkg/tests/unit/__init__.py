"""Unit tests for parts of cddsim."""
