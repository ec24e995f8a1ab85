"""
Report fingerprinting to check that reproduction runs are deterministic.
"""

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

UTC = timezone.utc

# keys whose values change from run to run
TIMING_KEYS = frozenset({"elapsed_s", "started_at", "finished_at", "fingerprint", "deterministic_with_previous"})


def strip_timing(data: Any) -> Any:
    """Copy of a JSON-like structure without timing fields."""
    if isinstance(data, dict):
        return {k: strip_timing(v) for k, v in data.items() if k not in TIMING_KEYS}
    if isinstance(data, list):
        return [strip_timing(v) for v in data]
    return data


def compute_report_fingerprint(report: dict) -> str:
    """
    Compute a deterministic fingerprint of a report.

    Args:
        report: JSON-serializable report

    Returns:
        SHA-256 hex digest of the canonical JSON without timing fields
    """
    canonical = json.dumps(strip_timing(report), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def load_report(path: Path) -> Optional[dict]:
    """
    Load a previously written report.

    Returns:
        Report dict, or None if missing or unreadable
    """
    if not path.exists():
        return None
    try:
        with path.open("r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError):
        return None


def save_report(report: dict, path: Path) -> None:
    """Write a report with its fingerprint and a finished_at stamp."""
    path.parent.mkdir(parents=True, exist_ok=True)
    report = dict(report)
    report["fingerprint"] = compute_report_fingerprint(report)
    report["finished_at"] = datetime.now(UTC).isoformat()
    with path.open("w", encoding="utf-8") as f:
        json.dump(report, f, indent=2, sort_keys=True)
