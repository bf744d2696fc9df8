from .FiniteGroup import *
from .Hom import *
from .GroupCatalog import *
from .SeparationOracle import *
from .LemmaVerifier import *
