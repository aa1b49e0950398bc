"""Literature-based discovery explorer.

Ingests two disjoint research-paper collections, embeds their author
keywords via a smoothed positive PMI matrix and truncated SVD, extracts
entry points (merged quality neighborhoods spanned by minimum spanning
trees), and serves them to exploration clients over a read-only JSON API.
"""

__version__ = "0.1.0"
