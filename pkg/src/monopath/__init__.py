"""Long monochromatic paths in two-colored graphs."""

__version__ = "0.1.0"
