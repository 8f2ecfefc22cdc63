from .partition import PartitionSchema
