from resources.data import CUT_FACETS, KNAPSACK_COUNTS


def get_knapsack_counts() -> dict:
    """Lattice point counts and integer hull sizes of Fibonacci knapsacks F_d(b)."""
    return {
        "instances": KNAPSACK_COUNTS,
        "format_help": "F_d(b): x >= 0, 2 x1 + 3 x2 + 5 x3 + 8 x4 + ... <= b",
    }


def get_cut_facets() -> dict:
    """Vertex and facet numbers of cut polytopes."""
    return {
        "instances": CUT_FACETS,
        "count": len(CUT_FACETS),
    }
