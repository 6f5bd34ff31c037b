from src.utils.logger.enums.logger_enums import LoggerLevel

__all__ = ["LoggerLevel"]
