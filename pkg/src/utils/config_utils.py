"""
Configuration management utilities for the factorization toolkit
"""

import json
import logging
import os
from typing import Optional

from dotenv import load_dotenv

from models.config import ToolkitConfig
from models.monoid import (
    AffineSemigroup,
    BlockMonoid,
    DirectSum,
    FinitePresentation,
    NumericalSemigroup,
    PuiseuxTruncation,
)

logger = logging.getLogger(__name__)


class ConfigManager:
    """Utility class for managing configuration and environment setup"""

    @staticmethod
    def load_environment():
        """Load environment variables from .env file"""
        load_dotenv()

    @staticmethod
    def default_config_path() -> str:
        return os.path.join(
            os.path.dirname(os.path.dirname(os.path.dirname(__file__))),
            "toolkit_config.json",
        )

    @staticmethod
    def load_toolkit_config(path: Optional[str] = None) -> ToolkitConfig:
        """Load toolkit defaults from JSON; built-in defaults if the file is absent"""
        config_path = path or os.getenv("FACTOR_CONFIG") or ConfigManager.default_config_path()

        if not os.path.exists(config_path):
            logger.info(f"No configuration at {config_path}, using built-in defaults")
            return ToolkitConfig()

        try:
            with open(config_path, "r") as f:
                config_data = json.load(f)
            config = ToolkitConfig(**config_data, source=config_path)
            logger.info(f"Loaded toolkit configuration from {config_path}")
            return config
        except Exception as e:
            logger.error(f"Error loading configuration: {e}")
            raise

    @staticmethod
    def override_from_environment(config: ToolkitConfig) -> ToolkitConfig:
        """Override config with FACTOR_BUDGET and FACTOR_WORKERS"""
        budget = os.getenv("FACTOR_BUDGET")
        workers = os.getenv("FACTOR_WORKERS")

        updates = {}
        if budget:
            updates["budget"] = int(budget)
        if workers:
            updates["workers"] = int(workers)
        if updates:
            logger.debug(f"Environment overrides: {updates}")
            config = config.model_copy(update=updates)
        return config

    @staticmethod
    def default_bound(config: ToolkitConfig, monoid) -> int:
        """Scan bound for a monoid when the caller gives none"""
        bounds = config.bounds
        if isinstance(monoid, NumericalSemigroup):
            return bounds.numerical
        if isinstance(monoid, AffineSemigroup):
            return bounds.affine
        if isinstance(monoid, PuiseuxTruncation):
            return bounds.puiseux
        if isinstance(monoid, FinitePresentation):
            top = max(
                (monoid.degree(side) for rel in monoid.relations for side in rel),
                default=max(monoid.weights),
            )
            return bounds.presentation_factor * top
        if isinstance(monoid, BlockMonoid):
            return bounds.block_factor * monoid.davenport
        if isinstance(monoid, DirectSum):
            return min(ConfigManager.default_bound(config, c) for c in monoid.components)
        raise TypeError(f"Unknown monoid type {type(monoid).__name__}")

    @staticmethod
    def get_config_summary(config: ToolkitConfig) -> dict:
        """Get a summary of the current configuration for logging/debugging"""
        return {
            "budget": config.budget,
            "workers": config.workers,
            "bounds": config.bounds.model_dump(),
            "asymptotic_terms": config.asymptotic.terms,
            "asymptotic_tolerance": config.asymptotic.tolerance,
            "source": config.source or "built-in defaults",
        }
