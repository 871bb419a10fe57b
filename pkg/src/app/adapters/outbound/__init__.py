"""Outbound adapters: filesystem artifacts and task execution."""
