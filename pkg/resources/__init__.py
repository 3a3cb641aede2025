from resources.resources import get_cut_facets, get_knapsack_counts

__all__ = [
    "get_cut_facets",
    "get_knapsack_counts",
]
