"""Configuration management for prvkit."""

import configparser
import dataclasses
import os
from typing import Optional

from prvkit.utils.logging import debug


@dataclasses.dataclass
class PrvkitConfig:
    """Configuration options for prvkit."""
    weyl_cap: int = 51840
    oracle_cap: int = 1_000_000
    max_rank: int = 6
    max_window_width: int = 96
    certify_widen: int = 4
    default_truncation: int = 4
    max_size: int = 4
    jobs: int = 1
    bound: int = 2
    compact: bool = False

    def read_one_config(self, config_path: str):
        """Read configuration from a single file."""
        rawconfig = configparser.ConfigParser()
        rawconfig.read(config_path)
        if rawconfig.has_section("LIMITS"):
            self.weyl_cap = rawconfig.getint("LIMITS", "weyl_cap", fallback=self.weyl_cap)
            self.oracle_cap = rawconfig.getint("LIMITS", "oracle_cap", fallback=self.oracle_cap)
            self.max_rank = rawconfig.getint("LIMITS", "max_rank", fallback=self.max_rank)
            self.max_window_width = rawconfig.getint("LIMITS", "max_window_width", fallback=self.max_window_width)

        if rawconfig.has_section("LATTICE"):
            self.certify_widen = rawconfig.getint("LATTICE", "certify_widen", fallback=self.certify_widen)
            self.default_truncation = rawconfig.getint(
                "LATTICE", "default_truncation", fallback=self.default_truncation
            )
            self.max_size = rawconfig.getint("LATTICE", "max_size", fallback=self.max_size)

        if rawconfig.has_section("SWEEP"):
            self.jobs = rawconfig.getint("SWEEP", "jobs", fallback=self.jobs)
            self.bound = rawconfig.getint("SWEEP", "bound", fallback=self.bound)

        if rawconfig.has_section("UI"):
            self.compact = rawconfig.getboolean("UI", "compact", fallback=self.compact)


# Global config singleton
CONFIG: Optional[PrvkitConfig] = None


def get_config() -> PrvkitConfig:
    """Get the global configuration, loading it if necessary."""
    global CONFIG
    if CONFIG is None:
        CONFIG = read_config()
    return CONFIG


def read_config() -> PrvkitConfig:
    """Read configuration from config files."""
    config = PrvkitConfig()
    config_paths = [os.path.expanduser("~/.prvkitconfig"), os.path.join(os.getcwd(), ".prvkitconfig")]

    for p in config_paths:
        # Working directory config overwrites home directory config
        if os.path.exists(p):
            debug("Reading config {}", p)
            config.read_one_config(p)

    return config
