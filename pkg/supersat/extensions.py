# supersat/extensions.py
from flask_limiter import Limiter
from flask_limiter.util import get_remote_address

from supersat.settings import Config

# ======================
# Rate Limiter
# ======================
# Campaign endpoints run exhaustive searches; Redis is used when LIMITER_STORAGE_URL /
# REDIS_URL is set, in-memory storage otherwise.
limiter = Limiter(
    key_func=get_remote_address,
    default_limits=[],
    storage_uri=Config.RATELIMIT_STORAGE_URI,
)
