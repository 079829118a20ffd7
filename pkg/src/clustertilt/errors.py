"""Exception hierarchy with stable error codes.

The CLI maps every ClusterTiltError to exit status 1 and prints the code;
the HTTP layer maps codes to 4xx payloads.  Codes are part of the public
interface and must not change casually.
"""


class ClusterTiltError(Exception):
    code = "ERROR"


class ParseError(ClusterTiltError):
    code = "PARSE"


class ValidationError(ClusterTiltError):
    code = "VALIDATION"


class NotAcyclic(ClusterTiltError):
    code = "NOT_ACYCLIC"


class NotDynkin(ClusterTiltError):
    code = "NOT_DYNKIN"


class WindowTooSmall(ClusterTiltError):
    code = "WINDOW_TOO_SMALL"


class ComposabilityError(ClusterTiltError):
    code = "NOT_COMPOSABLE"


class NotAModuleCollection(ClusterTiltError):
    code = "NOT_MODULES"


class NotTilting(ClusterTiltError):
    code = "NOT_TILTING"


class NotAlmostComplete(ClusterTiltError):
    code = "NOT_ALMOST_COMPLETE"


class NegativeExt(ClusterTiltError):
    code = "NEGATIVE_EXT"


class VerificationFailed(ClusterTiltError):
    code = "VERIFICATION_FAILED"


class UnknownObject(ClusterTiltError):
    code = "UNKNOWN_OBJECT"


class InternalError(ClusterTiltError):
    code = "INTERNAL"
