"""
Settings manager module for the Small World toolkit.
Handles all settings and configuration.
"""

import os


class SettingsManager:
    """Manages toolkit settings: in-process overrides, then environment, then defaults"""

    SETTINGS_PREFIX = "SMALLWORLD_"

    DEFAULT_WORKERS = 1
    DEFAULT_LOG_LEVEL = "INFO"
    DEFAULT_FLOAT_DIGITS = 12
    DEFAULT_SCORE_TOLERANCE = 1e-12
    DEFAULT_ROW_BLOCK_SIZE = 256

    _overrides = {}

    @classmethod
    def _env_key(cls, key):
        return cls.SETTINGS_PREFIX + key.upper()

    @classmethod
    def get_setting(cls, key, default=None):
        """Get a setting value"""
        if key in cls._overrides:
            return cls._overrides[key]
        return os.environ.get(cls._env_key(key), default)

    @classmethod
    def set_setting(cls, key, value):
        """Set a setting value for this process"""
        cls._overrides[key] = value

    @classmethod
    def _get_positive_int(cls, key, default):
        value = cls.get_setting(key, default)
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise ValueError(f"Setting '{key}' must be an integer, got {value!r}")
        if value < 1:
            raise ValueError(f"Setting '{key}' must be at least 1, got {value}")
        return value

    # Execution
    @classmethod
    def get_workers(cls):
        """Get the number of worker threads"""
        return cls._get_positive_int("workers", cls.DEFAULT_WORKERS)

    @classmethod
    def set_workers(cls, workers):
        """Set the number of worker threads"""
        cls.set_setting("workers", int(workers))

    @classmethod
    def get_row_block_size(cls):
        """Get the number of walk rows handled by one task"""
        return cls._get_positive_int("row_block_size", cls.DEFAULT_ROW_BLOCK_SIZE)

    @classmethod
    def set_row_block_size(cls, size):
        """Set the number of walk rows handled by one task"""
        cls.set_setting("row_block_size", int(size))

    # Logging
    @classmethod
    def get_log_level(cls):
        """Get the log level name"""
        return str(cls.get_setting("log_level", cls.DEFAULT_LOG_LEVEL)).upper()

    @classmethod
    def set_log_level(cls, level):
        """Set the log level name"""
        cls.set_setting("log_level", str(level).upper())

    # Output
    @classmethod
    def get_float_digits(cls):
        """Get the significant digits used for reals in CSV output"""
        return cls._get_positive_int("float_digits", cls.DEFAULT_FLOAT_DIGITS)

    @classmethod
    def set_float_digits(cls, digits):
        """Set the significant digits used for reals in CSV output"""
        cls.set_setting("float_digits", int(digits))

    @classmethod
    def get_score_tolerance(cls):
        """Get the absolute gap under which two confluence scores tie"""
        value = cls.get_setting("score_tolerance", cls.DEFAULT_SCORE_TOLERANCE)
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise ValueError(f"Setting 'score_tolerance' must be a number, got {value!r}")
        if not 0.0 <= value < 1.0:
            raise ValueError(f"Setting 'score_tolerance' must lie in [0, 1), got {value}")
        return value

    @classmethod
    def set_score_tolerance(cls, tolerance):
        """Set the absolute gap under which two confluence scores tie"""
        cls.set_setting("score_tolerance", float(tolerance))

    @classmethod
    def get_all_settings(cls):
        """Get all settings visible to this process"""
        all_settings = {
            key[len(cls.SETTINGS_PREFIX):].lower(): value
            for key, value in os.environ.items()
            if key.startswith(cls.SETTINGS_PREFIX)
        }
        all_settings.update(cls._overrides)
        return all_settings

    @classmethod
    def clear_all_settings(cls):
        """Clear all in-process overrides"""
        cls._overrides.clear()
