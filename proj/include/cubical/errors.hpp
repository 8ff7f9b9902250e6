#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubical {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string& what)
        : std::runtime_error(what)
    {}
};

class OverflowError : public Error
{
public:
    using Error::Error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/** A cell whose corner list does not have 2^k entries, or a negative dimension. */
class InvalidCell : public Error
{
public:
    using Error::Error;
};

/** Base for failures of the cubical complex axioms during construction. */
class ValidationError : public Error
{
public:
    ValidationError(const std::string& what, std::vector<std::size_t> witness)
        : Error(what)
        , m_witness(std::move(witness))
    {}

    /// Vertex ids that exhibit the failure.
    const std::vector<std::size_t>& witness() const { return m_witness; }

private:
    std::vector<std::size_t> m_witness;
};

class DuplicateVertexInCell : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

/** Two faces whose vertex-set intersection is not itself a face. */
class IntersectionNotAFace : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

/** Two cells disagree about the cube structure carried by a shared vertex set. */
class InconsistentSharedFace : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

class UnknownVertex : public Error
{
public:
    using Error::Error;
};

class UnknownFace : public Error
{
public:
    using Error::Error;
};

class NotPure : public Error
{
public:
    using Error::Error;
};

class ZeroDimensionalFace : public Error
{
public:
    using Error::Error;
};

/** Operation applied to the wrong kind of complex or vector. */
class KindMismatch : public Error
{
public:
    using Error::Error;
};

/** Topology metadata attached to a complex contradicts a computable check. */
class PreconditionFailed : public Error
{
public:
    using Error::Error;
};

/** Malformed complex file; carries a 1-based line and column. */
class ParseError : public Error
{
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message)
        , m_line(line)
        , m_column(column)
    {}

    std::size_t line() const { return m_line; }
    std::size_t column() const { return m_column; }

private:
    std::size_t m_line;
    std::size_t m_column;
};

/** A parsed complex fails validation or contradicts its declared metadata. */
class ValidationFailed : public Error
{
public:
    using Error::Error;
};

} // namespace cubical
