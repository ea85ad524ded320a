# Alphabets
GLYPHS = 'abcdefghijklmnopqrstuvwxyz'
NUMERIC_SYMBOL_PREFIX = 's'

# Bench
REVERSAL_GROWTH_MIN_ELL = 5
DEFAULT_BENCH_LMAX = 6
DEFAULT_BENCH_SEED = 0
# TODO: move to config.py once the bench grows a per-suite sample size flag
RANDOM_PAIRS_PER_POINT = 4
