from .construction import ConstructionSchema
