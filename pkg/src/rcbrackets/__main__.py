"""Module entry point: ``python -m rcbrackets``."""
from .cli import entrypoint

entrypoint()
