"""Presentation layer: CLI and run-document schemas."""
