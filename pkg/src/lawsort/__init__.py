"""lawsort: sorting algorithms derived from distributive laws over multiset-indexed carriers."""

__version__ = "0.1.0"
