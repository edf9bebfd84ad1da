"""Recognition of Bowditch representations of the free group of rank two."""

__version__ = "0.1.0"
