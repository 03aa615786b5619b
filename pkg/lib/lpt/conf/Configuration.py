import os
import logging
import configparser

from lib.lpt.core.exc import ConfigError

DEFAULTS = {
    "Oracle": {
        "enumeration_cap": "1048576",
        "cache_size": "200000",
        "cache_enabled": "true",
    },
    "Engine": {
        "strict": "false",
    },
    "Logging": {
        "level": "WARNING",
    },
    "Bench": {
        "workers": "1",
    },
}

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Configuration(object):

    def __init__(self, config_path=None):
        self.config_path = config_path
        self.config = None
        self.load()

    def load(self):
        self.config = configparser.ConfigParser()
        self.config.read_dict(DEFAULTS)
        if self.config_path is not None:
            try:
                self.config.read(self.config_path)
            except configparser.Error as err:
                raise ConfigError("cannot read %s: %s" % (self.config_path, err))

    def _getint(self, section, option):
        try:
            return self.config.getint(section, option)
        except ValueError:
            raise ConfigError("[%s] %s must be an integer" % (section, option))

    def _getboolean(self, section, option):
        try:
            return self.config.getboolean(section, option)
        except ValueError:
            raise ConfigError("[%s] %s must be a boolean" % (section, option))

    def enumeration_cap(self):
        return self._getint('Oracle', 'enumeration_cap')

    def cache_size(self):
        return self._getint('Oracle', 'cache_size')

    def cache_enabled(self):
        return self._getboolean('Oracle', 'cache_enabled')

    def strict(self):
        return self._getboolean('Engine', 'strict')

    def bench_workers(self):
        return self._getint('Bench', 'workers')

    def log_level(self):
        return parse_log_level(os.environ.get("LPT_LOG") or self.config.get('Logging', 'level'))


def parse_log_level(level):
    """Level number from a name such as "debug" or a number such as "10"."""
    level = level.strip()
    if level.isdigit():
        return int(level)
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ConfigError("unknown log level '%s'" % (level))
    return value


config = None


def build_config():
    explicit = os.environ.get("LPT_CONFIG")
    if explicit:
        if not os.path.exists(explicit):
            raise ConfigError("LPT_CONFIG points to a missing file: %s" % (explicit))
        return Configuration(explicit)
    search_path = [
        os.path.join(os.getcwd(), 'lpt.conf'),
        os.path.join(os.path.expanduser('~'), '.lpt.conf'),
        '/etc/lpt/lpt.conf'
    ]
    config_path = None
    for p in search_path:
        if os.path.exists(p):
            config_path = p
            break

    return Configuration(config_path)


def get_config():
    global config
    if config is None:
        config = build_config()
    return config


def reset_config():
    global config
    config = None


def configure_logging(level=None):
    """Attach one stderr handler to the ``lpt`` logger.

    Only the command line calls this; library modules just log.
    """
    if level is None:
        level = get_config().log_level()
    logger = logging.getLogger("lpt")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
