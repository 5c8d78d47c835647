"""(De)serialization factory for specs and configurations.

Current support for JSON and YAML.
"""

from __future__ import annotations

import json
import logging
from abc import ABC
from abc import abstractmethod
from inspect import Signature
from typing import Any
from typing import Callable

import yaml


logger = logging.getLogger(__name__)

SUPPORTED_FORMATS = ("JSON", "YAML")


class Serializer(ABC):
    """Serializer base class.

    Subclasses turn one domain object into a text stream and back. The
    text format is chosen at construction time.

    Args:
        stream_format: Format of the stream for serialization.
    """

    def __init__(self, stream_format: str) -> None:
        """Initialize serializer.

        Args:
            stream_format: Stream format. Must be in {"JSON", "YAML"}.
        """
        self.format = stream_format.upper()
        self.serialize_func = get_serializer(stream_format)
        self.deserialize_func = get_deserializer(stream_format)

    @abstractmethod
    def serialize(self, obj: Any) -> str:
        """Abstract method for serialize."""

    @abstractmethod
    def deserialize(self, stream: str) -> Any:
        """Abstract method for deserialize."""

    @staticmethod
    def validate_payload(
        payload: dict[str, Any],
        signature: Signature,
        strict: bool = True,
    ) -> dict[str, Any]:
        """Match payload keys against a constructor signature.

        Args:
            payload: Mapping decoded from a stream.
            signature: Signature of the target constructor.
            strict: When True, every parameter without a default must be present.

        Returns:
            Payload restricted to keys the signature accepts.

        Raises:
            KeyError: If a required key is missing.
        """
        observed = set(payload)
        expected = set(signature.parameters)
        required = {
            name
            for name, param in signature.parameters.items()
            if param.default is param.empty
        }

        if strict and not required.issubset(observed):
            raise KeyError(f"Key mismatch: {observed}, expected {expected}")

        extra = observed - expected
        if extra:
            logger.warning(f"Ignoring extra key: {sorted(extra)}")
            payload = {key: payload[key] for key in observed & expected}

        return payload


def get_serializer(stream_format: str) -> Callable[[Any], str]:
    """Get serializer based on format."""
    stream_format = stream_format.upper()
    if stream_format == "JSON":
        return _serialize_to_json
    elif stream_format == "YAML":
        return _serialize_to_yaml
    else:
        raise ValueError(stream_format)


def get_deserializer(stream_format: str) -> Callable[[str], Any]:
    """Get deserializer based on format."""
    stream_format = stream_format.upper()
    if stream_format == "JSON":
        return _deserialize_json
    elif stream_format == "YAML":
        return _deserialize_yaml
    else:
        raise ValueError(stream_format)


def _serialize_to_json(payload: Any) -> str:
    """Convert payload to JSON string."""
    return json.dumps(payload)


def _serialize_to_yaml(payload: Any) -> str:
    """Convert payload to YAML string."""
    return yaml.safe_dump(payload, sort_keys=False)


def _deserialize_json(stream: str) -> Any:
    """Convert JSON string to payload."""
    return json.loads(stream)


def _deserialize_yaml(stream: str) -> Any:
    """Convert YAML string to payload."""
    return yaml.safe_load(stream)
