# Utils module - shared utilities for prvkit
