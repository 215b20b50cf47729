"""Domain logic: graphs, transformation, spectra, invariants and validation."""
