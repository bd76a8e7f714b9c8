"""
Configuration management for fps-transcend
"""

import copy
import sys
import yaml
from typing import Dict, Any, List, Optional
from pathlib import Path


PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent


class Config:
    """Configuration manager for fps-transcend"""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path
        self._config: Dict[str, Any] = {}
        self.load_config()

    def _candidate_paths(self) -> List[Path]:
        """Locations searched for config.yaml, first match wins"""
        if self.config_path:
            return [Path(self.config_path)]
        return [Path.cwd() / "config.yaml", PROJECT_ROOT / "config.yaml"]

    def load_config(self) -> None:
        """Load configuration from YAML file, falling back to defaults"""
        self._config = self._get_default_config()
        self.loaded_from: Optional[str] = None
        for path in self._candidate_paths():
            if not path.exists():
                continue
            try:
                with open(path, 'r', encoding='utf-8') as file:
                    loaded = yaml.safe_load(file) or {}
            except (OSError, yaml.YAMLError) as e:
                # logger depends on config, so this one goes straight to stderr
                print(f"Error loading config {path}: {e}", file=sys.stderr)
                return
            self._merge(self._config, loaded)
            self.loaded_from = str(path)
            return

    @staticmethod
    def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> None:
        for key, value in override.items():
            if isinstance(value, dict) and isinstance(base.get(key), dict):
                Config._merge(base[key], value)
            else:
                base[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value using dot notation"""
        keys = key.split('.')
        value = self._config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def get_report_settings(self) -> Dict[str, Any]:
        """Get report serialization settings"""
        return self.get('report', {})

    def get_limits(self) -> Dict[str, Any]:
        """Get sweep guardrails"""
        return self.get('limits', {})

    def get_oracle_limits(self) -> Dict[str, Any]:
        """Get brute-force oracle caps"""
        return self.get('oracle', {})

    def get_partition_limits(self) -> Dict[str, Any]:
        """Get region tally caps"""
        return self.get('partition', {})

    def get_gap_limits(self) -> Dict[str, Any]:
        """Get Liouville gap-series caps"""
        return self.get('liouville', {})

    def get_criteria_defaults(self) -> Dict[str, Any]:
        """Get criteria sweep defaults"""
        return self.get('criteria', {})

    def get_classify_settings(self) -> Dict[str, Any]:
        """Get growth classifier settings"""
        return self.get('classify', {})

    def get_logging_settings(self) -> Dict[str, Any]:
        """Get logging settings"""
        return self.get('logging', {})

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration"""
        return copy.deepcopy(DEFAULT_CONFIG)


DEFAULT_CONFIG: Dict[str, Any] = {
    'report': {
        'schema': 'fps-transcend/1',
        'indent': 2
    },
    'limits': {
        'max_order': 60,
        'max_degree': 6,
        'superfactorial_max_order': 8,
        'witness_max_n': 400
    },
    'oracle': {
        'max_power': 4,
        'max_index': 16,
        'max_degree': 4
    },
    'partition': {
        'max_index': 20,
        'max_degree': 5
    },
    'liouville': {
        'max_q': 14,
        'max_p': 4,
        'max_counterexamples': 25
    },
    'criteria': {
        'lambda_max': 3,
        'm_max': 5
    },
    'classify': {
        'tau': '1/2',
        'min_n_max': 16
    },
    'logging': {
        'level': 'WARNING',
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        'file': None,
        'max_bytes': 10 * 1024 * 1024,
        'backup_count': 5
    }
}


# Global configuration instance
config = Config()
