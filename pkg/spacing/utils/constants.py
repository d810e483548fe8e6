"""
Centralized constants for spacing.

Magic numbers used by the generator, the oracles and the command line live
here so that the values in reports can be traced back to one place.

Usage:
    from spacing.utils.constants import EXIT, GENERATOR, LIMITS
"""


# ============================================================================
# Process exit codes
# ============================================================================

class EXIT:
    """
    Exit codes of the ``spacing`` command.

    64, 65 and 70 follow the BSD sysexits convention.
    """

    OK = 0                       # success, or a satisfiable solve
    UNSAT = 1                    # search proved there is no solution
    TIMEOUT = 2                  # search stopped at the time limit
    USAGE = 64                   # bad flags
    DATA = 65                    # unreadable instance, cnf or config file
    CHECK_FAILED = 70            # a check suite found a counterexample


# ============================================================================
# Domain values
# ============================================================================

class VALUES:
    """Reserved value identifiers."""

    DUMMY = 0                    # "no onset" / any value outside S


# ============================================================================
# Caps and timeouts
# ============================================================================

class LIMITS:
    """
    Default caps for exponential procedures and default time limits.

    All timeouts are in seconds.
    """

    ENUMERATION_CAP = 10 ** 7    # max product of domain sizes for brute force
    BOUNDED_S_CAP = 3            # max |S| for the joint bounded-S automaton
    BRUTE_SAT_MAX_VARS = 24      # truth-table SAT check
    SOLVE_TIMEOUT = 60.0         # single ``solve`` run
    BENCH_TIMEOUT = 10.0         # per instance and model in ``bench``
    PROTOCOL_TIMEOUT = 300.0     # five-minute limit of the full benchmark protocol


# ============================================================================
# Instance generator protocol
# ============================================================================

class GENERATOR:
    """
    Constants of the random Asynchronous Rhythms generator.

    ``p_2 = p_1 + SECOND_VOICE_OFFSET ± SECOND_VOICE_JITTER`` and
    ``p_l = DOUBLING_FACTOR * p_(l-2) ± DOUBLING_JITTER`` for later voices.
    """

    SECOND_VOICE_OFFSET = 4
    SECOND_VOICE_JITTER = 1
    DOUBLING_FACTOR = 2
    DOUBLING_JITTER = 3
    ONSET_DENSITY = 0.75         # share of n turned into onsets
    EXTENDED_FRACTION = 0.10     # share of domain values removed for the extended problem
    MIN_P1 = 2


# ============================================================================
# Benchmark grid
# ============================================================================

class BENCH:
    """The benchmark grid and report columns."""

    VOICES = (3, 4, 5)
    FIRST_PERIODS = (12, 18, 24)
    LAST_REPETITIONS = (2, 3, 4)
    INSTANCES_PER_CELL = 10
    MODELS = ("om", "sm", "sb", "sr")

    CSV_COLUMNS = (
        "h",
        "p1",
        "kh",
        "model",
        "instances",
        "solved",
        "mean_time",
        "mean_backtracks",
        "mean_nodes",
    )

    @classmethod
    def grid(cls):
        return [(h, p1, kh) for h in cls.VOICES for p1 in cls.FIRST_PERIODS for kh in cls.LAST_REPETITIONS]
