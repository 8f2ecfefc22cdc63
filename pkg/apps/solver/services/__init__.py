from .solver import DistinguishingSolver
