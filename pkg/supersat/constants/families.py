# Parameter names accepted by each construction kind (GraphFamilySpec.parameters, in order).
FAMILY_PARAMETERS = {
    "turan": ("n", "r"),
    "turan-plus-edge": ("n", "r"),
    "complete-multipartite": ("sizes",),
    "complete-bipartite-plus-edge": ("a", "b"),
    "star": ("k",),
    "cycle": ("k",),
    "clique": ("k",),
    "kite": (),
    "path": ("k",),
    "petersen": (),
    "book": ("k",),
    "partial-turan": ("m", "r"),
}

FAMILY_KINDS = tuple(FAMILY_PARAMETERS)
