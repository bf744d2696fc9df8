from .VarietySpec import *
from .PrimePolicy import *
from .ClosureResult import *
from .AVariety import *
from .AbelianVariety import *
from .PGroupVariety import *
from .HpVariety import *
from .APrimeScanVariety import *
from .NilpotentVariety import *
from .SupersolvableVariety import *
from .VarietyFactory import *
