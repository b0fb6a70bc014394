"""ParityKit: parity complexes, additive parity complexes and free augmented directed complexes."""

__version__ = "1.0.0"
