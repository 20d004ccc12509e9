# src/lapco/core/__init__.py
from .app import LabCore, APP_NAME, APP_AUTHOR
from .cli import main

__all__ = ["LabCore", "main", "APP_NAME", "APP_AUTHOR"]
