"""Pure numerical services of the domain."""
