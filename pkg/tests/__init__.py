"""Test package for the Rindler EqP checks."""
