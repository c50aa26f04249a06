"""Domain layer: models, services, ports and exceptions."""
