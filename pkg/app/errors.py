"""
Error types shared by the library, the CLI and the JSON API.
"""


class DsrgError(Exception):
    """Base class for every error raised by the dihedrant toolkit."""
    code = 'dsrg_error'
    status = 400
    usage = True

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        data = {'error': self.message, 'code': self.code}
        data.update(self.details)
        return data


# ==================== Usage errors ====================

class ModulusMismatch(DsrgError):
    """Operands live over different residue rings."""
    code = 'modulus_mismatch'

    def __init__(self, left, right):
        super().__init__(f'Modulus mismatch: {left} != {right}', left=left, right=right)


class NotADivisor(DsrgError):
    code = 'not_a_divisor'

    def __init__(self, n, v):
        super().__init__(f'{v} does not divide {n}', n=n, v=v)


class OutOfRange(DsrgError):
    code = 'out_of_range'


class InvalidSpec(DsrgError):
    """Malformed dihedrant or residue input (e.g. 0 in X)."""
    code = 'invalid_spec'


# ==================== Negative verdicts ====================

class NotDsrg(DsrgError):
    """The graph is not directed strongly regular; carries a witness."""
    code = 'not_dsrg'
    status = 422
    usage = False

    def __init__(self, message, witness=None, identity=None):
        details = {'witness': list(witness) if isinstance(witness, tuple) else witness}
        if identity is not None:
            details['identity'] = identity
        super().__init__(message, **details)
        self.witness = witness


class NotOrbitConstant(DsrgError):
    code = 'not_orbit_constant'
    status = 422
    usage = False

    def __init__(self, z1, z2):
        super().__init__(f'Residues {z1} and {z2} share an orbit but differ in multiplicity',
                         witness=[z1, z2])
        self.witness = (z1, z2)


class SpectrumNotTwoValued(DsrgError):
    code = 'spectrum_not_two_valued'
    status = 422
    usage = False

    def __init__(self, z, value):
        super().__init__(f'Spectrum value at z={z} is {value}', witness=z)
        self.witness = z


class HypothesisFailed(DsrgError):
    code = 'hypothesis_failed'
    status = 422
    usage = False

    def __init__(self, message, witness=None):
        super().__init__(message, witness=witness)
        self.witness = witness


class ConditionFail(DsrgError):
    """A named condition of a construction or theorem is violated."""
    code = 'condition_failed'
    status = 422
    usage = False

    def __init__(self, condition, witness=None, message=None):
        super().__init__(message or f'Condition ({condition}) fails at {witness}',
                         condition=condition, witness=witness)
        self.condition = condition
        self.witness = witness


# ==================== Internal inconsistencies ====================

class ConclusionFailed(DsrgError):
    """An instance contradicts a structural conclusion that should always hold."""
    code = 'conclusion_failed'
    status = 500
    usage = False


class NoCaseMatched(DsrgError):
    code = 'no_case_matched'
    status = 500
    usage = False


class VerifierDisagreement(DsrgError):
    code = 'verifier_disagreement'
    status = 500
    usage = False
