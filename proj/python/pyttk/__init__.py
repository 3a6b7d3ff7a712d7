from ._ttk import *  # noqa: F401,F403
