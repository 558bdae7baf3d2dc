# Named patterns accepted wherever a pattern is expected (CLI --pattern, HTTP, campaign files).
PATTERN_FORMS = {
    "K<k>": "complete graph on k vertices (K3, K4, K5, ...)",
    "K<a>,<b>": "complete bipartite graph K_{a,b}",
    "C<k>": "cycle on k >= 3 vertices",
    "P<k>": "path on k vertices",
    "kite": "4-cycle plus one chord",
    "petersen": "Petersen graph",
    "star:<k>": "star with k leaves",
    "book:<k>": "k triangles sharing one edge",
    "Kab+e:<a>,<b>": "K_{a,b} plus one edge inside the class of size a",
}
