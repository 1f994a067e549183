"""Constants for the fg_workbench package"""

DOMAIN = "fg_workbench"

DEFAULT_CONFIG_FILE = "config/workbench.yaml"

# whitehead
DEFAULT_PLATEAU_LIMIT = 100_000
DEFAULT_DECISION_PLATEAU_LIMIT = 50
MAX_FREE_FACTOR_RANK = 5

# quadratic
DEFAULT_SEARCH_BUDGET = 2_000_000
MAX_BRUTE_VARIABLES = 3
MAX_BRUTE_BOUND = 6
MAX_BRUTE_ALPHABET = 3
MAX_CONFIG_COEFFICIENTS = 3
IMPOSS_MIN_M = 9
IMPOSS_JS = (7, 8)
VARIABLE_PREFIX = "?"

# sampling
DEFAULT_TRIALS = 500
DEFAULT_SEED = 0
DEFAULT_MAX_LEN = 8

# cli exit codes
EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_SYNTAX_ERROR = 2

CONF_PLATEAU_LIMIT = "plateau_limit"
CONF_DECISION_PLATEAU_LIMIT = "decision_plateau_limit"
CONF_SEARCH_BUDGET = "search_budget"
CONF_TRIALS = "trials"
CONF_SEED = "seed"
CONF_LOGGER = "logger"
CONF_DEFAULT = "default"
CONF_LOGS = "logs"

CONF_SCENARIO = "scenario"
CONF_N = "n"
CONF_M = "m"
CONF_P = "p"
CONF_Q = "q"
CONF_MAX_LEN = "max_len"

SCENARIO_EXAMPLE_3_1 = "example-3-1"
SCENARIO_RANK_3_WITNESS = "rank-3-witness"
SCENARIO_FORALL_AP_OBSTRUCTION = "forall-ap-obstruction"
SCENARIO_FORALL_AP_WITNESSES = "forall-ap-witnesses"
SCENARIO_STRONG_AP = "strong-ap"
SCENARIO_PRIMITIVE_TOWER = "primitive-tower"
SCENARIO_SZMIELEW = "szmielew"

SCENARIOS = [
    SCENARIO_EXAMPLE_3_1,
    SCENARIO_RANK_3_WITNESS,
    SCENARIO_FORALL_AP_OBSTRUCTION,
    SCENARIO_FORALL_AP_WITNESSES,
    SCENARIO_STRONG_AP,
    SCENARIO_PRIMITIVE_TOWER,
    SCENARIO_SZMIELEW,
]

# scenarios
FORALL_AP_BRUTE_BOUND = 4
SZMIELEW_CHAIN_BOUND = 5
SZMIELEW_MAX_PRIME = 97
PRIMITIVE_CANDIDATES = ("a", "b", "a b", "a b^2", "a^2 b")
