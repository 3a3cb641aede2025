KNAPSACK_COUNTS = [
    {"d": 4, "b": 40, "points": 1021, "hull_facets": 6, "hull_vertices": 8},
    {"d": 4, "b": 50, "points": 2145, "hull_facets": 7, "hull_vertices": 11},
    {"d": 4, "b": 60, "points": 4008, "hull_facets": 7, "hull_vertices": 9},
    {"d": 4, "b": 70, "points": 6879, "hull_facets": 8, "hull_vertices": 12},
    {"d": 4, "b": 80, "points": 11069, "hull_facets": 6, "hull_vertices": 8},
    {"d": 4, "b": 90, "points": 16929, "hull_facets": 6, "hull_vertices": 8},
    {"d": 4, "b": 100, "points": 24853, "hull_facets": 8, "hull_vertices": 12},
    {"d": 5, "b": 40, "points": 1366, "hull_facets": 12, "hull_vertices": 16},
    {"d": 5, "b": 50, "points": 3173, "hull_facets": 15, "hull_vertices": 25},
    {"d": 5, "b": 60, "points": 6509, "hull_facets": 12, "hull_vertices": 19},
    {"d": 5, "b": 70, "points": 12182, "hull_facets": 12, "hull_vertices": 23},
    {"d": 5, "b": 80, "points": 21245, "hull_facets": 8, "hull_vertices": 13},
    {"d": 5, "b": 90, "points": 35025, "hull_facets": 13, "hull_vertices": 19},
    {"d": 5, "b": 100, "points": 55157, "hull_facets": 15, "hull_vertices": 25},
    {"d": 6, "b": 40, "points": 1481, "hull_facets": 25, "hull_vertices": 35},
    {"d": 6, "b": 50, "points": 3626, "hull_facets": 20, "hull_vertices": 37},
    {"d": 6, "b": 60, "points": 7853, "hull_facets": 21, "hull_vertices": 35},
    {"d": 6, "b": 70, "points": 15516, "hull_facets": 25, "hull_vertices": 40},
    {"d": 6, "b": 80, "points": 28544, "hull_facets": 21, "hull_vertices": 35},
    {"d": 6, "b": 90, "points": 49570, "hull_facets": 18, "hull_vertices": 31},
    {"d": 6, "b": 100, "points": 82090, "hull_facets": 22, "hull_vertices": 40},
    {"d": 7, "b": 60, "points": 8165},
    {"d": 8, "b": 60, "points": 8171},
]

# d: edges, n: cuts (vertices), m: facets
CUT_FACETS = [
    {"graph": "P:9", "d": 8, "n": 256, "m": 16},
    {"graph": "P:10", "d": 9, "n": 512, "m": 18},
    {"graph": "C:9", "d": 9, "n": 256, "m": 274},
    {"graph": "C:10", "d": 10, "n": 512, "m": 532},
    {"graph": "K:6", "d": 15, "n": 32, "m": 368},
    {"graph": "K:7", "d": 21, "n": 64, "m": 116764},
    *(
        {"graph": f"Gk:{k}", "d": k + 6, "n": 2 ** (k + 5), "m": 2 * k + 20}
        for k in range(15)
    ),
]
