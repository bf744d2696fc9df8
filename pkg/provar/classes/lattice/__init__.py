from .Lattice import *
from .Fringe import *
from .BasisDictionary import *
