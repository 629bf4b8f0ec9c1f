"""Flat key = value configuration files with line-numbered diagnostics.

Syntax: one ``key = value`` pair per line, ``#`` starts a comment, blank
lines are ignored. Keys are dotted lowercase names. Values are parsed on
demand as float/int/string by the accessors, which raise
:class:`ConfigError` pointing at the offending line.
"""

from .errors import ConfigError

__all__ = ["Config", "parse_config_text", "load_config"]


class Config:
    """Parsed key/value pairs with per-key line numbers."""

    def __init__(self, entries=None, source="<config>"):
        # key -> (raw string value, line number)
        self._entries = dict(entries or {})
        self._consumed = set()
        self.source = source

    def __contains__(self, key):
        return key in self._entries

    def keys(self):
        return self._entries.keys()

    def line_of(self, key):
        return self._entries[key][1] if key in self._entries else None

    def raw(self, key, default=None):
        self._consumed.add(key)
        if key in self._entries:
            return self._entries[key][0]
        return default

    def _convert(self, key, raw, kind):
        try:
            return kind(raw)
        except (TypeError, ValueError):
            raise ConfigError(
                f"value {raw!r} for key {key!r} is not a valid {kind.__name__}",
                line=self.line_of(key)) from None

    def get_float(self, key, default=None):
        raw = self.raw(key)
        if raw is None:
            if default is None:
                raise ConfigError(f"missing required key {key!r}")
            return float(default)
        return self._convert(key, raw, float)

    def get_int(self, key, default=None):
        raw = self.raw(key)
        if raw is None:
            if default is None:
                raise ConfigError(f"missing required key {key!r}")
            return int(default)
        return self._convert(key, raw, int)

    def get_str(self, key, default=None, choices=None):
        raw = self.raw(key, default)
        if raw is None:
            raise ConfigError(f"missing required key {key!r}")
        value = str(raw).strip().lower()
        if choices is not None and value not in choices:
            raise ConfigError(
                f"key {key!r} must be one of {sorted(choices)}, got {value!r}",
                line=self.line_of(key))
        return value

    def reject_unknown(self, own_prefixes, known_prefixes):
        """Error on unconsumed keys the running command should own.

        Keys under a foreign-but-known prefix are tolerated (one config
        file may drive several commands); anything else unconsumed is a
        typo and gets a line-numbered error.
        """
        for key in self._entries:
            if key in self._consumed:
                continue
            if any(key.startswith(p) for p in own_prefixes):
                raise ConfigError(f"unknown key {key!r}", line=self.line_of(key))
            if not any(key.startswith(p) for p in known_prefixes):
                raise ConfigError(f"unknown key {key!r}", line=self.line_of(key))

    def as_dict(self):
        return {k: v for k, (v, _) in sorted(self._entries.items())}


def parse_config_text(text, source="<config>"):
    entries = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw_line.strip()!r}",
                              line=lineno)
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if not key:
            raise ConfigError("empty key", line=lineno)
        if not value:
            raise ConfigError(f"empty value for key {key!r}", line=lineno)
        if key in entries:
            raise ConfigError(f"duplicate key {key!r} (first on line "
                              f"{entries[key][1]})", line=lineno)
        entries[key] = (value, lineno)
    return Config(entries, source=source)


def load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read(), source=str(path))
