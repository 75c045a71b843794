#ifndef MOBILICAST_ERRORS_HPP
#define MOBILICAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mobilicast
{

// Base of every library error. `kind` is the stable machine-readable class
// name ("InvalidDistribution", "RateLimited", ...) used in batch records and
// CLI diagnostics; `what()` carries the human-readable details.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what)
        , m_kind(std::move(kind))
    {
    }

    const std::string& kind() const noexcept
    {
        return m_kind;
    }

private:
    std::string m_kind;
};

// A categorical distribution failed validation (empty, negative mass,
// probabilities not summing to ~1, duplicate labels).
struct InvalidDistribution : Error {
    explicit InvalidDistribution(const std::string& what)
        : Error("InvalidDistribution", what)
    {
    }
};

// A required control variable is absent from a prior file.
struct MissingVariable : Error {
    explicit MissingVariable(const std::string& what)
        : Error("MissingVariable", what)
    {
    }
};

// A numeric or date range is inverted or out of bounds.
struct InvalidRange : Error {
    explicit InvalidRange(const std::string& what)
        : Error("InvalidRange", what)
    {
    }
};

// Structured input (JSON, dates, clock times, config) could not be decoded.
struct ParseFailure : Error {
    explicit ParseFailure(const std::string& what)
        : Error("ParseFailure", what)
    {
    }
};

// The filesystem said no.
struct IoFailure : Error {
    explicit IoFailure(const std::string& what)
        : Error("IoFailure", what)
    {
    }
};

// A run configuration is internally inconsistent or incomplete.
struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& what)
        : Error("InvalidConfig", what)
    {
    }
};

// Fewer usable diaries than the requested sample size.
struct InsufficientData : Error {
    explicit InsufficientData(const std::string& what)
        : Error("InsufficientData", what)
    {
    }
};

// An aggregate operation was asked to run on an empty corpus.
struct EmptyCorpus : Error {
    explicit EmptyCorpus(const std::string& what)
        : Error("EmptyCorpus", what)
    {
    }
};

// Destination statistics need at least one trip (a length-2 sequence).
struct NoTrips : Error {
    explicit NoTrips(const std::string& what)
        : Error("NoTrips", what)
    {
    }
};

// Two matrices/vectors that must align cell-for-cell do not.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what)
        : Error("ShapeMismatch", what)
    {
    }

protected:
    ShapeMismatch(std::string kind, const std::string& what)
        : Error(std::move(kind), what)
    {
    }
};

// Alignment failed specifically because the two sides use different type
// schemes. Subtype of ShapeMismatch so shape-level handlers still apply.
struct SchemeMismatch : ShapeMismatch {
    explicit SchemeMismatch(const std::string& what)
        : ShapeMismatch("SchemeMismatch", what)
    {
    }
};

// A cluster-count request outside [1, n].
struct InvalidK : Error {
    explicit InvalidK(const std::string& what)
        : Error("InvalidK", what)
    {
    }
};

// Base of generation-backend errors; remembers how many attempts were made
// so batch records can report retry effort.
class BackendError : public Error
{
public:
    BackendError(std::string kind, const std::string& what, int attempts)
        : Error(std::move(kind), what)
        , m_attempts(attempts)
    {
    }

    int attempts() const noexcept
    {
        return m_attempts;
    }

private:
    int m_attempts;
};

// Transport failure or non-retriable HTTP status.
struct BackendUnavailable : BackendError {
    explicit BackendUnavailable(const std::string& what, int attempts = 1)
        : BackendError("BackendUnavailable", what, attempts)
    {
    }
};

// HTTP 429 after exhausting retries.
struct RateLimited : BackendError {
    explicit RateLimited(const std::string& what, int attempts = 1)
        : BackendError("RateLimited", what, attempts)
    {
    }
};

// The service answered but not in the expected completion shape.
struct MalformedResponse : BackendError {
    explicit MalformedResponse(const std::string& what, int attempts = 1)
        : BackendError("MalformedResponse", what, attempts)
    {
    }
};

} // namespace mobilicast

#endif // MOBILICAST_ERRORS_HPP
