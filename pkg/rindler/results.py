"""Report writer for CLI runs.

Data files (CSV or JSON) depend only on the run configuration, so identical runs
produce byte-identical files. Session id, timestamp and the list of written files
go to a separate ``manifest.json``.
"""

from __future__ import annotations

import csv
import json
import logging
import os
from collections.abc import Iterable, Mapping, Sequence
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from rindler.errors import ConfigError

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


class ResultsManager:
    """Writes the data files of one run into ``output_dir``."""

    def __init__(self, output_dir: str | Path = "results"):
        self.output_dir = Path(output_dir)
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ConfigError(f"Cannot create output directory {self.output_dir}: {e}") from e
        if not os.access(self.output_dir, os.W_OK):
            raise ConfigError(f"Output directory is not writable: {self.output_dir}")

        self.session_id = self._generate_session_id()
        self.written: list[Path] = []

    def _generate_session_id(self) -> str:
        """Generate unique session ID."""
        return datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")

    def _record(self, path: Path) -> Path:
        self.written.append(path)
        logger.info(f"Wrote {path}")
        return path

    def write_csv(self, name: str, columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> Path:
        """UTF-8, header row, LF line endings; floats in shortest round-trip form."""
        path = self.output_dir / name
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=list(columns), lineterminator="\n", extrasaction="raise")
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
        return self._record(path)

    def write_json(self, name: str, document: Mapping[str, Any]) -> Path:
        """UTF-8, sorted keys, two-space indent, trailing newline. NaN and infinity are rejected."""
        path = self.output_dir / name
        text = json.dumps(document, sort_keys=True, indent=2, allow_nan=False, ensure_ascii=False)
        with path.open("w", encoding="utf-8", newline="\n") as f:
            f.write(text + "\n")
        return self._record(path)

    def save_manifest(self, command: str, config: Mapping[str, Any], exit_code: int = 0) -> Path:
        """The one file that carries run metadata."""
        path = self.output_dir / MANIFEST_NAME
        manifest = {
            "session_id": self.session_id,
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "command": command,
            "exit_code": exit_code,
            "config": dict(config),
            "files": sorted(p.name for p in self.written),
        }
        with path.open("w", encoding="utf-8") as f:
            json.dump(manifest, f, indent=2, sort_keys=True)
            f.write("\n")
        logger.info(f"Session manifest saved to {path}")
        return path
