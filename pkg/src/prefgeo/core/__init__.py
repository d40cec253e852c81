"""Pure algorithms over immutable exact values; no I/O happens in core."""
