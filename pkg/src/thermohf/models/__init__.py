from .ho import HarmonicOscillator
from .ising import IsingChain
from .lipkin import LipkinModel

__all__ = ["HarmonicOscillator", "IsingChain", "LipkinModel"]
