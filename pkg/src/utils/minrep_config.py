"""
MinRep Configuration Loader

Shared configuration for all MinRep tools: engine bounds, CLI limits and the
parallelism cap used by verify-all.

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import logging
import os
from pathlib import Path

# YAML support (optional)
try:
    import yaml
    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False

logger = logging.getLogger(__name__)


def _default_threads():
    return max(1, min(os.cpu_count() or 1, 8))


class MinRepConfig:
    """Shared MinRep configuration loader."""

    CONFIG_FILE = "config/minrep.yaml"

    def __init__(self, root_dir=None):
        """
        Initialize MinRep configuration.

        Args:
            root_dir: Root directory of the project. If None, auto-detected.
        """
        if root_dir:
            self.root_dir = Path(root_dir)
        else:
            # Auto-detect: go up from this file's location
            self.root_dir = Path(__file__).parent.parent.parent

        self.config = self._load_config()

    def _load_config(self):
        """Load configuration from file and environment variables."""
        config = {
            'engine': {
                'max_word_length': 8,
            },
            'parallel': {
                'threads': _default_threads(),
            },
            'cli': {
                'output': 'json',
                'max_n_decompose': 8,
                'max_n_verify': 7,
                'max_m_max': 201,
            },
            'settings': {
                'prefer_env_vars': True,
            }
        }

        config_path = self.root_dir / self.CONFIG_FILE
        if config_path.exists() and YAML_AVAILABLE:
            try:
                with open(config_path, 'r', encoding='utf-8') as f:
                    file_config = yaml.safe_load(f)
                    if file_config:
                        self._merge_config(config, file_config)
                logger.info("Loaded MinRep config from %s", config_path)
            except Exception as e:
                logger.warning("Could not load MinRep config file: %s", e)
        elif config_path.exists() and not YAML_AVAILABLE:
            logger.warning(
                "PyYAML not installed. Cannot load config file. Install with: pip install pyyaml"
            )

        if config['settings'].get('prefer_env_vars', True):
            self._load_env_vars(config)

        return config

    def _merge_config(self, base, override):
        """Recursively merge override into base config."""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def _load_env_vars(self, config):
        """Apply environment overrides.

        Note: Environment variables only override if they exist. They don't clear existing values.
        """
        threads = os.environ.get('MINREP_THREADS')
        if threads:
            try:
                config['parallel']['threads'] = max(1, int(threads))
            except ValueError:
                logger.warning("Ignoring non-integer MINREP_THREADS=%r", threads)
        max_word = os.environ.get('MINREP_MAX_WORD')
        if max_word:
            try:
                config['engine']['max_word_length'] = int(max_word)
            except ValueError:
                logger.warning("Ignoring non-integer MINREP_MAX_WORD=%r", max_word)
        if os.environ.get('MINREP_OUTPUT') in ('json', 'text'):
            config['cli']['output'] = os.environ['MINREP_OUTPUT']

    def reload_config(self):
        """Reload configuration from file and environment variables."""
        self.config = self._load_config()

    @property
    def max_word_length(self):
        return int(self.config['engine'].get('max_word_length', 8))

    @property
    def threads(self):
        return max(1, int(self.config['parallel'].get('threads', 1)))

    @property
    def output(self):
        return self.config['cli'].get('output', 'json')

    @property
    def max_n_decompose(self):
        return int(self.config['cli'].get('max_n_decompose', 8))

    @property
    def max_n_verify(self):
        return int(self.config['cli'].get('max_n_verify', 7))

    @property
    def max_m_max(self):
        return int(self.config['cli'].get('max_m_max', 201))


# Singleton instance for easy import
_config_instance = None


def get_minrep_config(root_dir=None):
    """Get the shared MinRep configuration instance."""
    global _config_instance
    if _config_instance is None:
        _config_instance = MinRepConfig(root_dir)
    return _config_instance


def reset_minrep_config():
    """Drop the shared instance so the next access re-reads file and environment."""
    global _config_instance
    _config_instance = None
