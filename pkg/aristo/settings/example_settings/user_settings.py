"""
Your `aristo` settings. Every value here can be overridden on the command line.
"""

# The highest order of smoothness that `line strata` tells apart; anything
# smoother is reported as "C^k+"
K_MAX = 2
# The seed for sampled regions, unless `--seed` is given
DEFAULT_SEED = 0
# How to read the axioms: "corrected" or "as-written"
DEFAULT_MODE = "corrected"
# The most valuations `logic valid` will try before giving up
VALUATION_BUDGET = 200000
# The largest algebra `logic counter` searches
COUNTERMODEL_MAX_SIZE = 5
# How many random regions `axioms check-line --random` adds to the samples
LINE_SAMPLE_COUNT = 1000
# The least time between two progress lines, with `--debug`
PROGRESS_INTERVAL_SECONDS = 5
