"""Shannon entropies and mutual information of helium-like two-electron ions
in position and momentum space."""

__version__ = "0.1.0"
