"""chowkit: determinantal and Pfaffian resultants and Chow forms, computed exactly."""

__version__ = "0.1.0"
