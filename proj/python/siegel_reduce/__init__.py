from siegel_reduce._core import *  # noqa: F401,F403
