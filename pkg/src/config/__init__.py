# src/config/__init__.py

from .settings import *