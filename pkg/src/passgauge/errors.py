"""Exception types raised across the library.

Everything derives from PassgaugeError so callers (notably the CLI) can
distinguish library failures from programming errors.
"""


class PassgaugeError(Exception):
    """Base class for all passgauge errors."""


class EmptyDictionary(PassgaugeError):
    """The breached-password dictionary has no entries."""


class EmptyCorpus(PassgaugeError):
    """An n-gram vocabulary was fitted on an empty corpus."""


class HeaderMismatch(PassgaugeError):
    """A dataset CSV does not start with the expected header."""


class InsufficientClassSize(PassgaugeError):
    """A class has too few records for the requested split or CV."""


class DegenerateClass(PassgaugeError):
    """SMOTE was asked to oversample a class with a single sample."""


class EmptyTrainingSet(PassgaugeError):
    """A scaler or model was fitted on zero samples."""


class AllZeroCounts(PassgaugeError):
    """Gini impurity of an empty class histogram is undefined."""


class SingleClassTrainingSet(PassgaugeError):
    """Forest training needs at least two classes present."""


class DimensionMismatch(PassgaugeError):
    """A feature vector does not match the model's expected width."""


class NonFiniteLoss(PassgaugeError):
    """Logistic-regression training diverged (learning rate too large)."""


class LengthMismatch(PassgaugeError):
    """True/predicted label sequences differ in length."""


class InvalidLabel(PassgaugeError):
    """A label outside {0, 1, 2} was passed to an evaluation routine."""


class EmptyMatrix(PassgaugeError):
    """Metrics were requested for a confusion matrix with zero samples."""


class UnknownSchemaVersion(PassgaugeError):
    """A pipeline archive declares a schema this build does not know."""


class CorruptArchive(PassgaugeError):
    """A pipeline archive failed its checksum or could not be parsed."""
