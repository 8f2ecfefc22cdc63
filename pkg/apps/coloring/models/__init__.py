from .partition import Partition, StabWitness, canonicalize, discrete_partition, trivial_partition
