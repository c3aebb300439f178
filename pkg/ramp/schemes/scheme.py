# coding: utf-8
"""
Block-level static homogeneous replication schemes.

A logical block is stored as N physical blocks, all protected by the same
code. Baseline keeps a single copy, primary-backup keeps N full copies and
falls back to the next one on a DUE, and an MDS erasure code spreads the
block over N fragments of which any K reconstruct it.
"""
from dataclasses import dataclass
import enum

from ramp.exceptions import DomainError


class SchemeKind(enum.Enum):
    BASELINE = 'baseline'
    PRIMARY_BACKUP = 'primary-backup'
    ERASURE_CODE = 'erasure-code'


@dataclass(frozen=True)
class Scheme:
    kind: SchemeKind
    n: int = 1
    k: int = 1

    def __post_init__(self):
        if not isinstance(self.kind, SchemeKind):
            raise DomainError(f'kind must be a SchemeKind, got {self.kind!r}')
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise DomainError(f'N and K must be integers, got N={self.n!r}, K={self.k!r}')

        if self.kind is SchemeKind.BASELINE:
            if self.n != 1 or self.k != 1:
                raise DomainError(f'baseline has N = K = 1, got N={self.n}, K={self.k}')
        elif self.kind is SchemeKind.PRIMARY_BACKUP:
            if self.n < 1 or self.k != 1:
                raise DomainError(f'primary-backup needs N >= 1 and K = 1, got N={self.n}, K={self.k}')
        elif not 1 <= self.k < self.n:
            raise DomainError(f'erasure coding needs N > K >= 1, got N={self.n}, K={self.k}')

    @classmethod
    def baseline(cls):
        return cls(SchemeKind.BASELINE)

    @classmethod
    def primary_backup(cls, n):
        return cls(SchemeKind.PRIMARY_BACKUP, n=n, k=1)

    @classmethod
    def erasure_code(cls, n, k):
        return cls(SchemeKind.ERASURE_CODE, n=n, k=k)

    def with_replicas(self, n):
        """
        The same scheme with N replaced; K stays put for erasure codes.
        """
        if self.kind is SchemeKind.BASELINE:
            raise DomainError('baseline has no replica count to vary')
        return Scheme(self.kind, n=n, k=self.k)

    @property
    def label(self):
        if self.kind is SchemeKind.BASELINE:
            return 'baseline'
        if self.kind is SchemeKind.PRIMARY_BACKUP:
            return f'pb-n{self.n}'
        return f'ec-n{self.n}-k{self.k}'

    def __str__(self):
        return self.label
