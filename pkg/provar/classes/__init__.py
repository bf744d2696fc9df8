from .provar import provar
from .Alphabet import *
from .Word import *
from .LabeledGraph import *
from .GraphMorphism import *
from .SchreierData import *
from .lattice import *
from .modlin import *
from .variety import *
from .oracle import *
from .Config import *
from .JobSpec import *
from .Reproduction import *
from .SpinnerHandler import *
