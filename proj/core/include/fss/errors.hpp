#pragma once

#include <stdexcept>

namespace fss {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Grade parsing rejected the input text.
class NotDecimalError : public Error {
public:
    using Error::Error;
};

// A grade (or matrix entry) fell outside [0, 1].
class GradeRangeError : public Error {
public:
    using Error::Error;
};

// A rational has no finite decimal expansion.
class NonTerminatingDecimalError : public Error {
public:
    using Error::Error;
};

// Two objects that must share a universe do not.
class UniverseMismatchError : public Error {
public:
    using Error::Error;
};

// A parameter label occurs more than once.
class DuplicateParamError : public Error {
public:
    using Error::Error;
};

// A parameter has no image (or the image list is shorter than the label list).
class MissingImageError : public Error {
public:
    using Error::Error;
};

// A constructor that needs at least one parameter got none.
class EmptyParamsError : public Error {
public:
    using Error::Error;
};

// Flattening produced two equal labels from distinct originals.
class FlattenCollisionError : public Error {
public:
    using Error::Error;
};

// Columns of different lengths were compared or combined.
class LengthMismatchError : public Error {
public:
    using Error::Error;
};

// Matrices with different row labels were combined.
class RowMismatchError : public Error {
public:
    using Error::Error;
};

// A row or element label occurs more than once.
class DuplicateLabelError : public Error {
public:
    using Error::Error;
};

// A law was handed the wrong number of operands.
class ArityMismatchError : public Error {
public:
    using Error::Error;
};

// A law's hypothesis does not hold for the operands; distinct from a violation.
class PreconditionUnmetError : public Error {
public:
    using Error::Error;
};

// A panel needs at least two evaluators.
class PanelTooSmallError : public Error {
public:
    using Error::Error;
};

// Evaluators in one panel disagree on the candidate label set.
class ParamSetMismatchError : public Error {
public:
    using Error::Error;
};

// Diagonal extraction was applied to a soft set whose parameters are not
// k-tuples over one base label set.
class NotAProductSoftSetError : public Error {
public:
    using Error::Error;
};

// Ranking was asked for with no candidates.
class EmptyDiagonalError : public Error {
public:
    using Error::Error;
};

// A document could not be parsed.
class MalformedDocumentError : public Error {
public:
    using Error::Error;
};

// Document dimensions are inconsistent.
class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

} // namespace fss
