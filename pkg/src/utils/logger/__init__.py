from src.utils.logger.logger import logger

__all__ = ["logger"]
