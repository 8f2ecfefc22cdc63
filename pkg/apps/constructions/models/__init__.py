from .blocks import BlockParams
