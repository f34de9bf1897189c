"""
Tests for configuration loading, environment overrides and default scan bounds
"""

import json

import pytest
from pydantic import ValidationError

from engines.block_monoid import BlockMonoidUtils
from engines.constructions import ConstructionFactory
from engines.monoid_core import MonoidBuilder
from models.config import ToolkitConfig
from models.group import FiniteAbelianGroup
from utils.config_utils import ConfigManager


@pytest.mark.unit
class TestConfigManager:
    """Configuration loading and overrides"""

    def test_missing_file_gives_defaults(self, tmp_path):
        config = ConfigManager.load_toolkit_config(str(tmp_path / "absent.json"))
        assert config == ToolkitConfig()
        assert config.budget == 5_000_000
        assert config.bounds.numerical == 500

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "toolkit_config.json"
        path.write_text(json.dumps({"budget": 1000, "bounds": {"numerical": 80}}))
        config = ConfigManager.load_toolkit_config(str(path))
        assert config.budget == 1000
        assert config.bounds.numerical == 80
        assert config.bounds.affine == 60, "Unset bounds keep their defaults"
        assert config.source == str(path)

    def test_invalid_file_raises(self, tmp_path):
        path = tmp_path / "toolkit_config.json"
        path.write_text(json.dumps({"budget": 0}))
        with pytest.raises(ValidationError):
            ConfigManager.load_toolkit_config(str(path))

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("FACTOR_BUDGET", "42")
        monkeypatch.setenv("FACTOR_WORKERS", "3")
        config = ConfigManager.override_from_environment(ToolkitConfig())
        assert (config.budget, config.workers) == (42, 3)

    def test_no_overrides(self, monkeypatch):
        monkeypatch.delenv("FACTOR_BUDGET", raising=False)
        monkeypatch.delenv("FACTOR_WORKERS", raising=False)
        config = ToolkitConfig()
        assert ConfigManager.override_from_environment(config) is config

    def test_config_summary(self):
        summary = ConfigManager.get_config_summary(ToolkitConfig())
        assert summary["source"] == "built-in defaults"
        assert summary["asymptotic_tolerance"] == "1/10"


@pytest.mark.unit
class TestDefaultBounds:
    """Per-kind scan bounds when no --bound is given"""

    @pytest.fixture
    def config(self):
        return ToolkitConfig()

    def test_numerical_and_affine(self, config):
        assert ConfigManager.default_bound(config, MonoidBuilder.make_numerical([6, 9, 20])) == 500
        assert ConfigManager.default_bound(config, MonoidBuilder.make_affine([(1, 0), (0, 1)])) == 60

    def test_presentation(self, config):
        monoid = ConstructionFactory.chain_monoid(3)
        assert monoid.weights == (4, 3, 2)
        assert ConfigManager.default_bound(config, monoid) == 24, "Twice the relation degree 12"

    def test_block(self, config):
        monoid = BlockMonoidUtils.block_presentation(FiniteAbelianGroup(invariant_factors=(5,)))
        assert ConfigManager.default_bound(config, monoid) == 10

    def test_direct_sum_takes_smallest(self, config):
        monoid = MonoidBuilder.direct_sum(
            [MonoidBuilder.make_numerical([2, 3]), MonoidBuilder.make_affine([(1, 1)])]
        )
        assert ConfigManager.default_bound(config, monoid) == 60
