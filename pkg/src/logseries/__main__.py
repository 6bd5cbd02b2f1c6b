"""Module entry point: python -m logseries."""

from .cli import run

run()
