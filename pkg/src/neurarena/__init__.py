"""neurarena: a toy arena shooter learned and served by a latent diffusion world model."""

__version__ = "0.1.0"
