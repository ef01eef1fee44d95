"""One-term homology of V-modules: chain complexes, Koszul comparison, Betti numbers."""
