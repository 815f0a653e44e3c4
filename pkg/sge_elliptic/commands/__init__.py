"""Command handlers for the sge-elliptic CLI."""
