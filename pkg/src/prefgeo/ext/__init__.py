"""File-facing extensions: JSON documents and SVG drawings."""
