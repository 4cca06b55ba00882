"""
Configuration file for the wpgap enumeration and verification toolkit.
Adjust these settings based on your system resources.
"""

# --- Enumeration Limits ---
# Largest genus any enumeration job may request
# Full enumeration beyond this is out of desk scale
GENUS_CAP = 35

# --- Concurrency Settings ---
# Default number of worker processes for subtree enumeration
# 1 runs everything in the calling process
DEFAULT_JOBS = 1

# Depth of the semigroup tree at which subtrees become independent tasks
# Deeper splits give more, smaller tasks
SPLIT_DEPTH = 6

# --- Result Cache ---
# Version tag written into every cache header; bump when the format changes
CACHE_FORMAT_VERSION = 1

# Scans below this genus are cheap and never touch the cache
CACHE_MIN_GENUS = 14

# Environment variable consulted when --cache-dir is not given
CACHE_DIR_ENV = "WPGAP_CACHE_DIR"

# --- Arithmetic ---
# Largest field characteristic accepted by the Wronskian check (primality is by trial division)
MAX_CHARACTERISTIC = 10 ** 9

# --- Logging ---
# Log level: DEBUG, INFO, WARNING, ERROR
LOG_LEVEL = "WARNING"
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

# --- Example configurations for different scenarios ---

# Configuration for development/testing (fast, limited processing)
DEV_CONFIG = {
    "GENUS_CAP": 20,
    "DEFAULT_JOBS": 1,
    "SPLIT_DEPTH": 4,
    "LOG_LEVEL": "DEBUG",
}

# Configuration for production (balanced performance)
PROD_CONFIG = {
    "GENUS_CAP": 35,
    "DEFAULT_JOBS": 4,
    "SPLIT_DEPTH": 6,
    "LOG_LEVEL": "INFO",
}

# Configuration for high-performance systems (maximum speed)
HIGH_PERF_CONFIG = {
    "GENUS_CAP": 35,
    "DEFAULT_JOBS": 16,
    "SPLIT_DEPTH": 9,
    "LOG_LEVEL": "WARNING",
}

PROFILES = {
    "dev": DEV_CONFIG,
    "prod": PROD_CONFIG,
    "high_perf": HIGH_PERF_CONFIG,
}


def apply_config(config_name="default"):
    """Apply a predefined configuration."""
    import sys
    current_module = sys.modules[__name__]

    config = PROFILES.get(config_name)
    if config is None:
        return  # Use default values

    for key, value in config.items():
        setattr(current_module, key, value)

# Usage example:
# from config import apply_config
# apply_config("dev")  # Apply development configuration
