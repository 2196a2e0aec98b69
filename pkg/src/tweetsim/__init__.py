"""tweetsim: agent-based generation of microblogging count series around
localized events, with parameter estimation and cross-correlation validation.
"""

__version__ = "0.1.0"

from .core import (ConfigError, CountSeries, FixedParams, GridCoord,
                   NetworkModel, SimulationConfig, VariableParams,
                   config_from_dict, config_to_dict, is_night, night_mask,
                   validate_config)
from .engine import (PatchState, TickRecord, TweetEvent, TweetKind, World,
                     decide_action, draw_z, event_tweet_probability,
                     initialize, records_to_series, run, spread_event, step)
from .estimate import (EstimationError, SegmentStats, auto_night_mask,
                       estimate_event_duration, estimate_probabilities,
                       segment_series)
from .scenarios import SCENARIO_NAMES, VARIABLE_PRESETS, scenario_config
from .stats import (CcfReport, CcfSummary, ZeroVarianceError, ccf, compare,
                    significance_threshold, uniform_baseline)
from .worldgen import (Agent, Network, RingSet, build_network, build_rings,
                       place_users)

__all__ = [
    "__version__",
    # core
    "ConfigError", "CountSeries", "FixedParams", "GridCoord", "NetworkModel",
    "SimulationConfig", "VariableParams", "config_from_dict", "config_to_dict",
    "is_night", "night_mask", "validate_config",
    # setup
    "Agent", "Network", "RingSet", "build_network", "build_rings", "place_users",
    # engine
    "PatchState", "TickRecord", "TweetEvent", "TweetKind", "World",
    "decide_action", "draw_z", "event_tweet_probability", "initialize",
    "records_to_series", "run", "spread_event", "step",
    # stats
    "CcfReport", "CcfSummary", "ZeroVarianceError", "ccf", "compare",
    "significance_threshold", "uniform_baseline",
    # estimation
    "EstimationError", "SegmentStats", "auto_night_mask",
    "estimate_event_duration", "estimate_probabilities", "segment_series",
    # scenarios
    "SCENARIO_NAMES", "VARIABLE_PRESETS", "scenario_config",
]
