"""Shared cddsim infrastructure."""

from cddsim.core.serialization import Serializer
from cddsim.core.serialization import get_deserializer
from cddsim.core.serialization import get_serializer


__all__ = ["Serializer", "get_deserializer", "get_serializer"]
