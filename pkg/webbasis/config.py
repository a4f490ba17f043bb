import os
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # App Settings
    APP_NAME: str = "webbasis"
    DEBUG: bool = os.environ.get("DEBUG", "False").lower() in ("true", "1", "t")
    LOG_LEVEL: str = os.environ.get("LOG_LEVEL", "INFO")

    # Scale guards
    MAX_BLOCK_WORDS: int = int(os.environ.get("WEBBASIS_MAX_WORDS", 5000))  # words per assembled block
    MAX_RELATION_RANK: int = int(os.environ.get("MAX_RELATION_RANK", 5))  # relation suite cost guard
    MAX_PAIRING_RANK: int = int(os.environ.get("MAX_PAIRING_RANK", 8))
    MAX_WAVE_SIZE: int = int(os.environ.get("MAX_WAVE_SIZE", 12))  # nk for closed wave enumeration

    # Rendering
    SVG_CELL_SIZE: float = float(os.environ.get("SVG_CELL_SIZE", 60.0))  # pixels per grid step


settings = Settings()
