from .element import BiElement, Side, Vertex, bi_identity, tau, u, v
