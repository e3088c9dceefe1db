from dataclasses import dataclass
from pathlib import Path
import configparser
import logging
import time


CONFIG_SECTION = "fpt_triangles"
DEFAULT_CONFIG = Path.home().joinpath(".fpt_triangles.cfg")
LOG_FORMAT = "%(levelname)s: %(asctime)s: %(message)s"


# ------------------------------------------------------------------------------
def format_error(msg: str, resolution: str = "") -> str:
    """
    Formats an error message as a banner that stands out in logs and on
    stderr. Example:
    ```
    ########################
    #
    #   Details     : Graph is not chordal: later neighbors of vertex 3 are not a clique
    #   Resolution  : Supply a deletion set whose removal leaves a chordal graph.
    #
    ########################
    ```
    Resolution message is optional.

    Inputs:
    --------
    msg (str):
        Details about the error.

    resolution (str):
        Suggestion on how to resolve the error.
        Defaults to empty string.
    """
    lines = ["", "########################", "#", f"#   Details     : {msg}"]
    if resolution:
        lines.append(f"#   Resolution  : {resolution}")
    lines += ["#", "########################"]

    return "\n".join(lines)


################################################################################
@dataclass(frozen=True)
class Settings:
    oracle_limit: int = 500
    dtdd_limit: int = 20
    p4_limit: int = 2000
    default_d: int = 2
    bench_reps: int = 3
    log_level: str = "INFO"
    log_file: str = ""


# ------------------------------------------------------------------------------
def get_config(config_path=None):
    """
    Reads the toolkit config file with the following format:
    [fpt_triangles]
    oracle_limit = 500
    dtdd_limit = 20
    p4_limit = 2000
    default_d = 2
    bench_reps = 3
    log_level = INFO
    log_file =

    If the config_path input is None, it will look for the file ~/.fpt_triangles.cfg
    """
    if config_path:
        config_file = Path(config_path)
    else:
        config_file = DEFAULT_CONFIG

    config = configparser.ConfigParser()
    if not config_file.exists():
        # the defaults are fine for most uses, only complain about explicit paths
        if config_path:
            logging.error(f"Could not find the config file: {config_file}")
        return config

    config.read(config_file)

    return config


# ------------------------------------------------------------------------------
def get_settings(config_path=None) -> Settings:
    """
    Returns the Settings read from the config file, falling back to the
    defaults for every missing key.
    """
    config = get_config(config_path=config_path)
    if CONFIG_SECTION not in config:
        return Settings()

    section = config[CONFIG_SECTION]
    defaults = Settings()

    return Settings(
        oracle_limit=section.getint("oracle_limit", defaults.oracle_limit),
        dtdd_limit=section.getint("dtdd_limit", defaults.dtdd_limit),
        p4_limit=section.getint("p4_limit", defaults.p4_limit),
        default_d=section.getint("default_d", defaults.default_d),
        bench_reps=section.getint("bench_reps", defaults.bench_reps),
        log_level=section.get("log_level", defaults.log_level),
        log_file=section.get("log_file", defaults.log_file),
    )


# ------------------------------------------------------------------------------
def setup_logging(log_file=None, level="INFO"):
    """
    Configures the root logger. Without a log_file the log goes to stderr.
    """
    if log_file:
        logging.basicConfig(filename=log_file, format=LOG_FORMAT, level=level)
    else:
        logging.basicConfig(format=LOG_FORMAT, level=level)


# ------------------------------------------------------------------------------
def timed(func, *args, **kwargs):
    """
    Runs func and returns (result, elapsed seconds).
    """
    start = time.perf_counter()
    result = func(*args, **kwargs)

    return result, time.perf_counter() - start
