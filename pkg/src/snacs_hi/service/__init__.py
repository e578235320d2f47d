"""Service layer: CLI, HTTP API, document store."""
