class QdsimError(Exception):
    """ Base class of all qdsim errors """


class DimensionError(QdsimError, ValueError):
    """ Non-square matrix or mismatched Hilbert-space dimensions """


class SymmetryError(QdsimError, ValueError):
    """ Matrix expected to be Hermitian is not, within tolerance """


class DomainError(QdsimError, ValueError):
    """ Parameter outside its declared range """


class BracketError(QdsimError, ValueError):
    """ Root bracket without a sign change """


class ConfigError(QdsimError, ValueError):
    """ Invalid run configuration """


class ReferenceDiscrepancyWarning(UserWarning):
    """ A computed crossing time disagrees with a tabulated reference value """
