"""Neural a-posteriori-information decoding toolkit.

Train a discriminator whose logits measure the a-posteriori information of
each codeword given a received vector, decode by minimizing it, and estimate
entropy, mutual information, and error probability from the same posteriors.
Includes simulated channels (Gaussian, nonlinear-Gaussian, impulsive
Bernoulli-Gaussian mixture) and the analytic reference decoders.
"""

from ._mindsim import *  # noqa: F401,F403
from ._mindsim import __version__  # noqa: F401
