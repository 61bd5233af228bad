"""Exception hierarchy.

Every error carries a short machine-readable ``code`` used by the CLI error
object.
"""


class AbharmError(ValueError):
    code = "error"


class NonPositiveOrder(AbharmError):
    code = "non_positive_order"


class SizeCapExceeded(AbharmError):
    code = "size_cap_exceeded"


class ShapeMismatch(AbharmError):
    code = "shape_mismatch"


class IndexOutOfRange(AbharmError):
    code = "index_out_of_range"


class ExponentCapExceeded(AbharmError):
    code = "exponent_cap_exceeded"


class OverflowToInfinity(AbharmError):
    code = "overflow_to_infinity"


class ZeroBase(AbharmError):
    code = "zero_base"


class InvalidBase(AbharmError):
    code = "invalid_base"


class DepthTooSmall(AbharmError):
    code = "depth_too_small"


class NonFiniteValue(AbharmError):
    code = "non_finite_value"


class InvalidWeight(AbharmError):
    code = "invalid_weight"


class SchemaError(AbharmError):
    code = "schema_error"
