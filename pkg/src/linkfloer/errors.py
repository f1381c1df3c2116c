"""Exception hierarchy shared by every module of the package."""


class LinkFloerError(Exception):
    """Base class for all errors raised by linkfloer."""


class GenusTooSmall(LinkFloerError):
    """The fiber surface must have genus at least one."""


class ModelMismatch(LinkFloerError):
    """Classes or maps living on different surfaces were combined."""


class NotSymplectic(LinkFloerError):
    """A matrix fails to preserve the intersection form."""


class NotHomogeneous(LinkFloerError):
    pass


class DegreeOfZero(LinkFloerError):
    pass


class LevelOfZero(LinkFloerError):
    pass


class AmbientMismatch(LinkFloerError):
    pass


class NotCleanlyIntersecting(LinkFloerError):
    pass


class EmptyInput(LinkFloerError):
    pass


class ObstructionUndetermined(LinkFloerError):
    """Disc obstructions could not be certified to vanish; HF is not defined.

    The failing certificate is kept on ``self.certificate``.
    """

    def __init__(self, certificate, message=None):
        self.certificate = certificate
        if message is None:
            failed = [c.name for c in certificate.checks if not c.passed]
            message = "obstruction undetermined; failed checks: " + ", ".join(failed)
        super().__init__(message)


class MaslovParityUnverified(LinkFloerError):
    pass


class BasisNotSpanning(LinkFloerError):
    pass


class SpecError(LinkFloerError):
    """Base for problems with an input spec file.

    ``issues`` is a list of ``(path, line, message)`` tuples; ``line`` is
    1-based or ``None`` when no source position is known.
    """

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("\n".join(self.format_issues()))

    def format_issues(self):
        out = []
        for path, line, message in self.issues:
            where = path or "<root>"
            if line is not None:
                where = f"line {line}: {where}"
            out.append(f"{where}: {message}")
        return out


class ParseError(SpecError):
    pass


class ValidationError(SpecError):
    pass
