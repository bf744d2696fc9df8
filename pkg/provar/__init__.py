from provar.classes import *
from provar.lib import *
