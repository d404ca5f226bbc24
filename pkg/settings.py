import logging
import os
from dataclasses import dataclass
from typing import Tuple

from errors import ConfigError

logger = logging.getLogger(__name__)

try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    logger.warning("python-dotenv not available; reading configuration from the environment only")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    allowed_ips: Tuple[str, ...] = ("127.0.0.1/32",)
    host: str = "127.0.0.1"
    port: int = 5000
    trace_limit: int = 10000


def _int_setting(name, default, minimum, maximum=None):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(name, raw, "expected an integer") from None
    if value < minimum or (maximum is not None and value > maximum):
        bounds = f">= {minimum}" if maximum is None else f"between {minimum} and {maximum}"
        raise ConfigError(name, raw, f"must be {bounds}")
    return value


def load_settings():
    """Read settings from the environment (and .env, if present).

    Raises ConfigError for malformed numeric values.
    """
    return Settings(
        log_level=os.getenv("VINTV_LOG_LEVEL", "WARNING").upper(),
        allowed_ips=tuple(ip.strip() for ip in os.getenv("ALLOWED_IPS", "127.0.0.1/32").split(",") if ip.strip()),
        host=os.getenv("VINTV_HOST", "127.0.0.1"),
        port=_int_setting("VINTV_PORT", 5000, 1, 65535),
        trace_limit=_int_setting("VINTV_TRACE_LIMIT", 10000, 1),
    )


def configure_logging(level="WARNING"):
    root = logging.getLogger()
    if not any(getattr(h, "_vintv", False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._vintv = True
        root.addHandler(handler)
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
