"""Named parameter sets shared by the tests."""
