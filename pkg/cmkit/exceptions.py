class CMKitError(Exception):
    """Raised when a cmkit operation cannot produce a trustworthy value."""

    def __init__(self, message):
        self.message = message
        super().__init__(message)

    def __str__(self):
        return self.message


class ParameterInvalidError(CMKitError):
    """Raised when a parameter is invalid for an operation."""

    def __init__(self, parameter, value, hint=None):
        self.parameter = parameter
        self.value = value
        self.message = (
            f'Invalid `{parameter}` parameter: {value}. {hint}'
            if hint
            else f'Invalid `{parameter}` parameter: {value}.'
        )
        super().__init__(self.message)


class DomainError(ParameterInvalidError):
    """Raised when an argument lies outside the domain of a function."""


class InvalidIndexError(CMKitError):
    """Raised when (p, m, n, q) does not index a member of the family."""

    def __init__(self, index, violated: str):
        self.index = index
        self.violated = violated
        self.message = f'Invalid family index {index}: violates {violated}.'
        super().__init__(self.message)


class UnsupportedOrderError(CMKitError):
    """Raised when a derivative order exceeds what the engine supports."""

    def __init__(self, order: int, maximum: int):
        self.order = order
        self.maximum = maximum
        self.message = (
            f'Order {order} is not supported; the configured maximum is {maximum}.'
        )
        super().__init__(self.message)


class EvaluationOverflowError(CMKitError):
    """Raised when a value leaves the binary64 range."""

    def __init__(self, quantity: str, detail: str | None = None):
        self.quantity = quantity
        self.message = (
            f'Overflow while evaluating {quantity}: {detail}'
            if detail
            else f'Overflow while evaluating {quantity}.'
        )
        super().__init__(self.message)


class NearZeroDenominatorError(CMKitError):
    """Raised when a ratio's denominator is too small to divide by."""

    def __init__(self, value: float):
        self.value = value
        self.message = f'Denominator magnitude {value:.3e} is below 1e-300.'
        super().__init__(self.message)


class QuadratureError(CMKitError):
    """Raised when a quadrature does not meet its tolerance within budget."""

    def __init__(self, nodes: int, error: float, tolerance: float):
        self.nodes = nodes
        self.error = error
        self.tolerance = tolerance
        self.message = (
            f'Quadrature did not converge after {nodes} nodes: '
            f'error estimate {error:.3e} exceeds tolerance {tolerance:.3e}.'
        )
        super().__init__(self.message)


class BracketError(CMKitError):
    """Raised when no sign change can be bracketed."""

    def __init__(self, lo: float, hi: float):
        self.lo = lo
        self.hi = hi
        self.message = f'No sign change found in [{lo}, {hi}].'
        super().__init__(self.message)


class NoWitnessError(CMKitError):
    """Raised when a sharpness probe finds no violating point."""

    def __init__(self, searched_range: tuple[float, float]):
        self.searched_range = searched_range
        self.message = (
            f'No witness found for x in [{searched_range[0]:g}, {searched_range[1]:g}]. '
            'Enlarge the search range or the perturbation.'
        )
        super().__init__(self.message)


class LimitDivergenceError(CMKitError):
    """Raised when a limit table moves away from its target."""

    def __init__(self, kind: str, gaps: list[float], tolerance: float | None = None):
        self.kind = kind
        self.gaps = gaps
        self.tolerance = tolerance
        listed = ', '.join(f'{gap:.3e}' for gap in gaps)
        if tolerance is None:
            self.message = f'Ratio does not approach its {kind} limit: gaps {listed}'
        else:
            self.message = (
                f'Ratio stalls short of its {kind} limit: final gap {gaps[-1]:.3e} '
                f'exceeds {tolerance:.3e} (gaps {listed})'
            )
        super().__init__(self.message)
