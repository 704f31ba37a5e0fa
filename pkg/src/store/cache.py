"""Verification cache - sqlite record of decomposition documents already checked."""
import hashlib
import json
import logging
import sqlite3
import time
from pathlib import Path

logger = logging.getLogger(__name__)


class VerificationCache:
    """Cache verify() outcomes by the SHA-256 of the canonical JSON document."""

    def __init__(self, db_path: Path):
        self.db_path = Path(db_path)
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        self._init_db()

    def _init_db(self) -> None:
        with sqlite3.connect(self.db_path) as conn:
            conn.execute("""
                CREATE TABLE IF NOT EXISTS verified (
                    key TEXT PRIMARY KEY,
                    verified INTEGER NOT NULL,
                    created_at REAL NOT NULL
                )
            """)

    def _hash(self, document: dict) -> str:
        data = json.dumps(document, sort_keys=True)
        return hashlib.sha256(data.encode()).hexdigest()

    def get(self, document: dict) -> bool | None:
        key = self._hash(document)
        with sqlite3.connect(self.db_path) as conn:
            row = conn.execute("SELECT verified FROM verified WHERE key = ?", (key,)).fetchone()
        if row is None:
            return None
        logger.debug("verification cache hit %s", key[:12])
        return bool(row[0])

    def set(self, document: dict, verified: bool) -> None:
        key = self._hash(document)
        with sqlite3.connect(self.db_path) as conn:
            conn.execute(
                "INSERT OR REPLACE INTO verified (key, verified, created_at) VALUES (?, ?, ?)",
                (key, int(verified), time.time()),
            )
