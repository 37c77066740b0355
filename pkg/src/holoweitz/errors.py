"""Exception hierarchy shared by all holoweitz modules."""


class HoloweitzError(Exception):
    """Base class for all domain errors raised by this package."""


class UnsupportedType(HoloweitzError):
    """Requested root system family/rank pair is not supported."""


class DimensionMismatch(HoloweitzError):
    """Vectors do not live in the coordinate space of the root system."""


class NotDominant(HoloweitzError):
    """Operation requires a dominant weight."""


class TrivialHolonomyRep(HoloweitzError):
    """Casimir renormalization is undefined when the reference Casimir is zero."""


class MixedRootSystems(HoloweitzError):
    """Operands belong to different root systems."""


class InternalNegativeMultiplicity(HoloweitzError):
    """Klimyk accumulation ended negative; signals an implementation bug."""


class DegreeOutOfRange(HoloweitzError):
    """Exterior power degree outside [0, dim]."""


class NotACharacter(HoloweitzError):
    """Greedy extraction hit a negative multiplicity; input was not a character."""


class UnsupportedContext(HoloweitzError):
    """Unknown holonomy context identifier."""


class MultiplicityViolation(HoloweitzError):
    """A tensor product summand occurs more than once; Schur-based reasoning unsound."""


class NotAFormComponent(HoloweitzError):
    """Bundle does not occur in the requested form space."""


class ContextNotSupported(HoloweitzError):
    """Prover rules require a Ricci-flat exceptional holonomy context."""
