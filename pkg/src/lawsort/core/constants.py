"""
constants.py
------------
Named defaults shared by the library, the CLI and the test-suite, split out so
they can be tuned in one place (bench settings, exhaustive domains, exit codes).
"""

# ── element domain (CLI instantiation) ───────────────────────────────────
INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

# ── build modes ──────────────────────────────────────────────────────────
MODE_ENV_VAR   = "LAWSORT_MODE"   # checked | trusted
DEFAULT_MODE   = "checked"

# ── algorithm ids as spelled on the command line ─────────────────────────
ALGO_INSERT  = "insert"
ALGO_SELECT  = "select"
ALGO_TREE_FF = "tree-ff"    # treesort build, merge flatten
ALGO_TREE_FU = "tree-fu"    # treesort build, deleteMin flatten
ALGO_TREE_UF = "tree-uf"    # quicksort build, merge flatten
ALGO_TREE_UU = "tree-uu"    # quicksort build, deleteMin flatten
ALGO_HEAP    = "heap"       # sift build, deleteMin-via-blend flatten
ALGO_HEAP_FF = "heap-ff"    # sift build, merge flatten

ALGO_NAMES = (
    ALGO_INSERT, ALGO_SELECT,
    ALGO_TREE_FF, ALGO_TREE_FU, ALGO_TREE_UF, ALGO_TREE_UU,
    ALGO_HEAP, ALGO_HEAP_FF,
)

# ── exhaustive desk-scale domains ────────────────────────────────────────
SMALL_ALPHABET        = (0, 1, 2)
SEMANTICS_MAX_LEN     = 5   # 3^0 + ... + 3^5 = 364 lists
FACTORISATION_MAX_LEN = 6   # 3^0 + ... + 3^6 = 1093 lists

# ── randomized property runs ─────────────────────────────────────────────
DEFAULT_SEED        = 20240101
VERIFY_CASES        = 200       # desk-scale default
VERIFY_MAX_LEN      = 60
VERIFY_FULL_CASES   = 10_000    # acceptance-scale (`verify --full`)
VERIFY_FULL_MAX_LEN = 1_000
VALUE_BOUND         = 10 ** 6   # draws lie in [-VALUE_BOUND, VALUE_BOUND]
INTERLEAVINGS       = 1_000     # insert/delete_min interleavings
INTERLEAVE_OPS      = 40

# ── benchmark ────────────────────────────────────────────────────────────
BENCH_REPEATS = 5                                   # median of 5
BENCH_SHAPES  = ("random", "sorted", "reverse", "constant")
BENCH_SIZES   = (100, 200, 400)

# ── exit codes ───────────────────────────────────────────────────────────
EXIT_OK                = 0
EXIT_MALFORMED_INPUT   = 1
EXIT_PROPERTY_FAILURE  = 2
EXIT_USAGE             = 64  # bad command line (sysexits EX_USAGE)
