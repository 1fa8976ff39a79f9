"""Exception hierarchy shared by the pipeline stages."""


class WsdError(Exception):
    """Base class for data and validation failures."""


class TextDecodeError(WsdError, ValueError):
    def __init__(self, offset, path=None, reason="invalid UTF-8"):
        self.offset = offset
        self.path = path
        where = f"{path}: " if path else ""
        super().__init__(f"{where}{reason} at byte offset {offset}")


class EmptyCorpusError(WsdError):
    pass


class FormatError(WsdError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        prefix = ""
        if path is not None:
            prefix += f"{path}:"
        if line is not None:
            prefix += f"{line}:"
        super().__init__(f"{prefix} {message}" if prefix else message)


class IntegrityError(WsdError, ValueError):
    pass


class InsufficientDataError(WsdError):
    def __init__(self, class_id, message=None):
        self.class_id = class_id
        super().__init__(message or f"class {class_id!r} has no usable training examples")
