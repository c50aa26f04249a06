"""Tests for Promtior RAG Assistant."""
