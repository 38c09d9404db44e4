"""gliderdr: underwater-glider simulation, RNN velocity regression, and
dead-reckoning replay against ground truth."""

__version__ = "0.1.0"
