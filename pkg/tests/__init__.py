"""Tests for the fg_workbench package."""
