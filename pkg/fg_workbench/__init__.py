"""Workbench for free groups and their centralizer extensions."""
