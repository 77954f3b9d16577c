"""Two-photon coincidence and visibility simulator.

Classical, converted-classical and quantum coincidence predictions for the
Ghosh-Mandel, quantum-eraser and Franson interference experiments.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
