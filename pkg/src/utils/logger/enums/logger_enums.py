from enum import Enum


class LoggerLevel(str, Enum):
    debug = "DEBUG"
    info = "INFO"
    warning = "WARNING"
    error = "ERROR"

    @property
    def rank(self) -> int:
        return _RANKS[self]


_RANKS = {
    LoggerLevel.debug: 10,
    LoggerLevel.info: 20,
    LoggerLevel.warning: 30,
    LoggerLevel.error: 40,
}
