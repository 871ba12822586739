##
# @file __init__.py
# @brief Package Initializer
# @author Alexander Rothman <[gnomesort@megate.ch](mailto:gnomesort@megate.ch)>
# @date 2024
# @copyright AGPL-3.0-or-later
from .ExactArithmetic import *
from .WeylGroup import *
from .RootSystem import *
from .Polynomial import *
from .Invariants import *
from .VerifyReport import *
from .GenerationChain import *
from .MinusculeCase import *
from .OrbitCache import *
from .Verification import *
