"""Pydantic schemas of the run document."""

from .config_doc import ConfigDoc, effective_config_json, load_config, parse_config

__all__ = ["ConfigDoc", "effective_config_json", "load_config", "parse_config"]
