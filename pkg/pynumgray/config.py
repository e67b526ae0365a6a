""" Layered configuration of size guards and defaults, from presets, config files, environment and command line """
import os
import logging
import pathlib
import functools
import configparser
from collections import OrderedDict

try:
    from importlib.resources import files
except ImportError:
    from importlib_resources import files

try:
    import tomllib
except ImportError:
    import tomli as tomllib


logger = logging.getLogger(__name__)

SECTION = 'pynumgray'
ENV_SIZE_LIMIT = 'PYNUMGRAY_SIZE_LIMIT'
INT_KEYS = ('string_limit', 'perm_limit', 'pattern_limit', 'max_pattern_length', 'eager_gray_length')


class SizeGuardError(RuntimeError):
    """ An enumeration was refused because its size exceeds the configured limit """
    def __init__(self, count, limit, what):
        super().__init__(f'Refusing to enumerate {count} {what}: limit is {limit} (use --force or raise the limit)')
        self.count = count
        self.limit = limit
        self.what = what


class Settings:
    """ Size limits and defaults, loaded in order from presets, a user config file, the environment, then options """
    def __init__(self, config=None, **options):
        """ Load all configuration layers

        Args:
            config (`str` or path-like): Path to an ini or toml configuration file
            options (`dict`): Overrides, typically from the command line, e.g. `string_limit` or `force`
        """
        self._cache = {}
        self.config = configparser.ConfigParser(interpolation=configparser.ExtendedInterpolation(),
                                                dict_type=OrderedDict)
        for preset in self.preset_configs():
            self.config.read_string(preset.read_text(encoding='utf-8'), source=str(preset))

        known = self.config.options(SECTION)
        unknown = [opt for opt in options if opt not in known]
        if unknown:
            raise ValueError(f'Unknown setting(s): {", ".join(unknown)}')

        if config is not None:
            self.load_user_config(config)

        env_limit = os.environ.get(ENV_SIZE_LIMIT)
        if env_limit:
            self.config.read_dict({SECTION: {'string_limit': env_limit}}, source=ENV_SIZE_LIMIT)

        self.config.read_dict({SECTION: {opt: str(arg).lower() if isinstance(arg, bool) else str(arg)
                                         for opt, arg in options.items() if arg is not None}}, source='CLI')
        self._parse_all()


    def _parse_all(self):
        """ Parse and check every known key, filling the cache

        Raises:
            ValueError: if a limit is not a non-negative integer or force is not a boolean
        """
        self._cache.clear()
        for key in INT_KEYS:
            try:
                value = self.config.getint(SECTION, key)
            except ValueError:
                raise ValueError(f'{key} must be an integer, got {self.config.get(SECTION, key)!r}') from None
            if value < 0:
                raise ValueError(f'{key} must not be negative, got {value}')
            self._cache[key] = value

        try:
            self._cache['force'] = self.config.getboolean(SECTION, 'force')
        except ValueError:
            raise ValueError(f'force must be a boolean, got {self.config.get(SECTION, "force")!r}') from None


    @staticmethod
    def preset_configs():
        """ Return the sorted list of preset configuration resources shipped with the package """
        presets = files('pynumgray').joinpath('presets')
        return sorted((entry for entry in presets.iterdir() if entry.name.endswith('.conf')), key=lambda e: e.name)


    @classmethod
    @functools.lru_cache(maxsize=None)
    def default(cls):
        """ Shared settings from presets and environment only, used when library calls get no explicit settings """
        return cls()


    def load_user_config(self, path):
        """ Load a user config file into the settings

        Args:
            path (`str` or path-like): Path to an ini file with a `[pynumgray]` section or a toml file with a
                                       `[tool.pynumgray]` table
        """
        path = pathlib.Path(path)
        if not path.exists():
            raise FileNotFoundError(str(path))

        if path.suffix == '.toml':
            with open(path, 'rb') as f:
                table = tomllib.load(f).get('tool', {}).get(SECTION, {})
            config = {SECTION: {key: str(value).lower() if isinstance(value, bool) else str(value)
                                for key, value in table.items() if type(value) is not dict}}
        else:
            parser = configparser.RawConfigParser()
            try:
                parser.read(path)
            except configparser.Error as err:
                raise ValueError(f'Cannot parse {path}: {err}') from None
            config = {SECTION: dict(parser.items(SECTION))} if parser.has_section(SECTION) else {}

        self.config.read_dict(config, source=str(path))
        self._parse_all()


    def getint(self, key):
        """ Read an integer setting, parsed once per load

        Args:
            key (`str`): the setting name, e.g. `string_limit`

        Returns:
            `int`: the value from the last layer that sets it
        """
        if key not in self._cache:
            self._cache[key] = self.config.getint(SECTION, key)
        return self._cache[key]


    @property
    def force(self):
        """ `bool`: whether size guards are disabled """
        if 'force' not in self._cache:
            self._cache['force'] = self.config.getboolean(SECTION, 'force')
        return self._cache['force']

    @property
    def string_limit(self):
        """ `int`: most strings a single listing may hold """
        return self.getint('string_limit')

    @property
    def perm_limit(self):
        """ `int`: most permutations a brute-force enumeration may scan """
        return self.getint('perm_limit')

    @property
    def pattern_limit(self):
        """ `int`: most subsequences a pattern containment test may examine """
        return self.getint('pattern_limit')

    @property
    def max_pattern_length(self):
        """ `int`: longest pattern accepted by containment tests """
        return self.getint('max_pattern_length')

    @property
    def eager_gray_length(self):
        """ `int`: longest strings for which Gray codes may be built as a list """
        return self.getint('eager_gray_length')


    def guard(self, count, what, limit_key='string_limit'):
        """ Refuse an enumeration of `count` objects if it exceeds the limit named by `limit_key`

        Args:
            count (`int`): The number of objects that would be produced
            what (`str`): Human-readable name of the objects, for the error message
            limit_key (`str`): The setting holding the relevant limit

        Raises:
            SizeGuardError: if the count exceeds the limit and `force` is not set
        """
        limit = self.getint(limit_key)
        if count <= limit:
            return
        if self.force:
            logger.warning('Enumerating %d %s above the %s of %d', count, what, limit_key, limit)
            return
        logger.debug('Refused %d %s (%s = %d)', count, what, limit_key, limit)
        raise SizeGuardError(count, limit, what)


def resolve(settings):
    """ Return `settings`, or the shared default settings if it is `None` """
    return Settings.default() if settings is None else settings
