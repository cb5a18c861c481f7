import os

from .default import *  # NOQA

# creating needed directories
if not os.path.exists(WITTSUM_LOG_DIRECTORY):  # NOQA
    os.makedirs(WITTSUM_LOG_DIRECTORY)  # NOQA
