class FactorlabError(Exception):
    pass


class CyclotomicZeroDivision(FactorlabError, ZeroDivisionError):
    pass


class InvalidModuleError(FactorlabError, ValueError):
    pass


class SectionError(FactorlabError, ValueError):
    pass


class FuelExhausted(FactorlabError):
    def __init__(self, message, used=None):
        super().__init__(message)
        self.used = used


class DepthOverflow(FuelExhausted):
    pass


class InvalidConfig(FactorlabError, ValueError):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__('; '.join(self.errors))
