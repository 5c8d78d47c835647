"""Spin systems and Pauli-word Hamiltonian specs."""

from __future__ import annotations

import inspect
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Any
from typing import Iterable

import numpy as np
from numpy.typing import NDArray

from cddsim.constants import PAULIS
from cddsim.core.serialization import Serializer
from cddsim.dynamics.exceptions import PauliWordError
from cddsim.dynamics.exceptions import SpinSystemError


@dataclass(frozen=True)
class SpinSystem:
    """System qubits followed by bath spins, all spin-1/2.

    System spins occupy the leading tensor factors.

    Args:
        n_system: Number of system qubits, at least one.
        n_bath: Number of bath spins.
    """

    n_system: int = 1
    n_bath: int = 0

    def __post_init__(self) -> None:
        """Validate spin counts."""
        if self.n_system < 1:
            raise SpinSystemError(
                f"Need at least one system qubit, got {self.n_system}"
            )
        if self.n_bath < 0:
            raise SpinSystemError(f"Bath spin count must be >= 0, got {self.n_bath}")

    @property
    def n_spins(self) -> int:
        """Total number of spins."""
        return self.n_system + self.n_bath

    @property
    def system_dim(self) -> int:
        """Hilbert-space dimension of the system."""
        return 2**self.n_system

    @property
    def bath_dim(self) -> int:
        """Hilbert-space dimension of the bath."""
        return 2**self.n_bath

    @property
    def dim(self) -> int:
        """Joint Hilbert-space dimension."""
        return 2**self.n_spins


class TermKind(Enum):
    """Which part of ``H_S + H_B + H_SB`` a term belongs to."""

    SYSTEM = "system"
    BATH = "bath"
    COUPLING = "coupling"


@dataclass(frozen=True)
class PauliTerm:
    """Real coefficient times a tensor product of Pauli matrices.

    Args:
        coefficient: Real weight of the term.
        word: One of I, X, Y, Z per spin, e.g. ``"ZIXI"``.
    """

    coefficient: float
    word: str

    def __post_init__(self) -> None:
        """Normalize and validate the word."""
        word = self.word.upper()
        if not word or set(word) - set(PAULIS):
            raise PauliWordError(self.word)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "coefficient", float(self.coefficient))

    def kind(self, system: SpinSystem) -> TermKind:
        """Partition tag of the term. Identity words count as system terms."""
        on_system = any(p != "I" for p in self.word[: system.n_system])
        on_bath = any(p != "I" for p in self.word[system.n_system :])
        if on_system and on_bath:
            return TermKind.COUPLING
        if on_bath:
            return TermKind.BATH
        return TermKind.SYSTEM

    def matrix(self) -> NDArray[np.complex128]:
        """Dense matrix of the bare word (without the coefficient)."""
        factors = [PAULIS[p] for p in self.word]
        return reduce(np.kron, factors, np.eye(1, dtype=np.complex128))


@dataclass(frozen=True)
class HamiltonianSpec:
    """Weighted sum of Pauli words over system and bath spins.

    Args:
        terms: Pauli terms, all words of length `n_system + n_bath`.
        n_system: Number of leading spins that form the system.
        n_bath: Number of bath spins.
    """

    terms: tuple[PauliTerm, ...] = ()
    n_system: int = 1
    n_bath: int = 0

    def __post_init__(self) -> None:
        """Validate word lengths against the spin counts."""
        terms = tuple(
            term if isinstance(term, PauliTerm) else PauliTerm(*term)
            for term in self.terms
        )
        object.__setattr__(self, "terms", terms)

        n_spins = self.system.n_spins
        for term in terms:
            if len(term.word) != n_spins:
                raise PauliWordError(term.word, n_spins)

    @classmethod
    def from_terms(
        cls,
        terms: Iterable[tuple[float, str] | PauliTerm],
        n_system: int = 1,
    ) -> HamiltonianSpec:
        """Build a spec, inferring the bath size from the first word."""
        terms = tuple(t if isinstance(t, PauliTerm) else PauliTerm(*t) for t in terms)
        n_bath = len(terms[0].word) - n_system if terms else 0
        return cls(terms=terms, n_system=n_system, n_bath=n_bath)

    @property
    def system(self) -> SpinSystem:
        """Spin system the spec lives on."""
        return SpinSystem(self.n_system, self.n_bath)

    def kinds(self) -> list[TermKind]:
        """Partition tag per term."""
        system = self.system
        return [term.kind(system) for term in self.terms]

    def part(self, kind: TermKind) -> HamiltonianSpec:
        """Sub-spec with only the terms of one kind."""
        system = self.system
        terms = tuple(term for term in self.terms if term.kind(system) is kind)
        return HamiltonianSpec(terms, self.n_system, self.n_bath)

    def without(self, kind: TermKind) -> HamiltonianSpec:
        """Sub-spec with the terms of one kind removed."""
        system = self.system
        terms = tuple(term for term in self.terms if term.kind(system) is not kind)
        return HamiltonianSpec(terms, self.n_system, self.n_bath)

    def scaled(self, kind: TermKind, factor: float) -> HamiltonianSpec:
        """Copy with the coefficients of one kind multiplied by `factor`."""
        system = self.system
        terms = tuple(
            PauliTerm(term.coefficient * factor, term.word)
            if term.kind(system) is kind
            else term
            for term in self.terms
        )
        return HamiltonianSpec(terms, self.n_system, self.n_bath)

    def is_one_local(self) -> bool:
        """Every coupling term touches exactly one system qubit."""
        system = self.system
        return all(
            sum(p != "I" for p in term.word[: system.n_system]) == 1
            for term in self.terms
            if term.kind(system) is TermKind.COUPLING
        )

    def __add__(self, other: HamiltonianSpec) -> HamiltonianSpec:
        """Concatenate the terms of two specs on the same spin system."""
        if self.system != other.system:
            raise SpinSystemError(
                f"Cannot add specs on {self.system} and {other.system}"
            )
        return HamiltonianSpec(self.terms + other.terms, self.n_system, self.n_bath)

    def to_dict(self) -> dict[str, Any]:
        """Convert spec to dictionary."""
        return dict(
            n_system=self.n_system,
            n_bath=self.n_bath,
            terms=[
                dict(coefficient=term.coefficient, word=term.word)
                for term in self.terms
            ],
        )

    @classmethod
    def from_dict(cls, other: dict[str, Any]) -> HamiltonianSpec:
        """Make spec from dictionary."""
        terms = tuple(PauliTerm(**term) for term in other.get("terms", []))
        return cls(terms, other.get("n_system", 1), other.get("n_bath", 0))

    def serialize(self, stream_format: str) -> str:
        """Serialize the spec into buffer."""
        serializer = HamiltonianSpecSerializer(stream_format)
        return serializer.serialize(self)

    @classmethod
    def deserialize(cls, stream: str, stream_format: str) -> HamiltonianSpec:
        """Deserialize buffer into a spec."""
        serializer = HamiltonianSpecSerializer(stream_format)
        return serializer.deserialize(stream)


class HamiltonianSpecSerializer(Serializer):
    """Serializer implementation for HamiltonianSpec."""

    def serialize(self, spec: HamiltonianSpec) -> str:
        """Serialize HamiltonianSpec into buffer."""
        return self.serialize_func(spec.to_dict())

    def deserialize(self, stream: str) -> HamiltonianSpec:
        """Deserialize buffer into HamiltonianSpec."""
        signature = inspect.signature(HamiltonianSpec)

        payload = self.deserialize_func(stream)
        payload = self.validate_payload(payload, signature)

        return HamiltonianSpec.from_dict(payload)


def build_operator(
    spec: HamiltonianSpec,
    system: SpinSystem | None = None,
) -> NDArray[np.complex128]:
    """Dense Hermitian matrix of a Pauli-word spec.

    Args:
        spec: Terms to sum.
        system: Spin system to build on. Defaults to the spec's own.

    Returns:
        Sum of coefficient times tensor-product Pauli matrix.

    Raises:
        PauliWordError: If a word length differs from the spin count.
    """
    system = spec.system if system is None else system

    operator = np.zeros((system.dim, system.dim), dtype=np.complex128)
    for term in spec.terms:
        if len(term.word) != system.n_spins:
            raise PauliWordError(term.word, system.n_spins)
        operator += term.coefficient * term.matrix()

    return operator
