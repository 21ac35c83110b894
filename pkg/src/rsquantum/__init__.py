"""Two-parameter quantum groups of types A, B, C and D over Q(r, s)."""
