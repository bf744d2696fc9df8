from .ModSubgroup import *
from .MagnusElement import *
from .MagnusQuotient import *
