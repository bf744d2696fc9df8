from .exceptions import *
from .helpers import *
from .output import *
