from ._oscemu import *  # noqa: F401,F403
from ._oscemu import __doc__  # noqa: F401
