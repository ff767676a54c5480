"""Step definitions for the acceptance scenarios."""
