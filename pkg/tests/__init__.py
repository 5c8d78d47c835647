"""Test suite for cddsim."""
