# coding: utf-8


class RampError(Exception):
    pass


class DomainError(RampError, ValueError):
    pass


class ConfigurationError(RampError, ValueError):
    pass


class OracleError(RampError, ValueError):
    pass


class InfeasibleError(RampError):
    def __init__(self, constraint, t_max, message=None):
        self.constraint = constraint
        self.t_max = t_max
        super().__init__(message or f'no t <= {t_max} satisfies the {constraint} target')
