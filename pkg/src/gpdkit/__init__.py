"""Computational kernel for groupoid presentations, crossed modules and
double groupoids with connections, all law-checked by brute force on small
finite models.  The ``vk`` command line fronts the same operations."""

__version__ = "0.1.0"
