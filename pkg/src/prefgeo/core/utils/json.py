"""JSON file utilities for configuration and document files.

This module provides utilities for working with JSON files, including
automatic file creation with default data and safe loading/saving.
"""
import json
import pathlib


def touch_json(path, default_data=None):
    """Load a JSON file, creating it with default data if it doesn't exist.

    Args:
        path: Path to the JSON file (string or Path object).
        default_data: Default data to write if file doesn't exist (default: {}).

    Returns:
        dict or list: The loaded JSON data from the file.
    """
    path = pathlib.Path(path)

    if not path.exists():
        save_json(path, {} if default_data is None else default_data)

    return load_json(path)


def load_json(path):
    """Read a UTF-8 JSON file."""
    with open(pathlib.Path(path), "r", encoding="utf-8") as f:
        return json.load(f)


def dump_json(data) -> str:
    """Serialize data the same way save_json writes it."""
    return json.dumps(data, indent=4, ensure_ascii=False)


def save_json(path, data):
    """Save data to a JSON file with pretty formatting.

    Args:
        path: Path to the JSON file (string or Path object).
        data: Data to save (must be JSON-serializable).

    Note:
        Uses UTF-8 encoding with 4-space indentation.
        Non-ASCII characters are preserved (ensure_ascii=False).
    """
    path = pathlib.Path(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_json(data))
        f.write("\n")
