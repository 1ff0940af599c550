#ifndef GBO_ERRORS_HPP
#define GBO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbo {

/** Base class for all solver errors. */
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateIterate : Error {
    explicit DegenerateIterate(const std::string& what) : Error(what) {}
};

struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

struct ResampleOutOfBand : Error {
    explicit ResampleOutOfBand(const std::string& what) : Error(what) {}
};

struct DegenerateCurvature : Error {
    explicit DegenerateCurvature(const std::string& what) : Error(what) {}
};

struct AmbiguousPeak : Error {
    explicit AmbiguousPeak(const std::string& what) : Error(what) {}
};

struct BracketInvalid : Error {
    explicit BracketInvalid(const std::string& what) : Error(what) {}
};

struct NonIntegrableProfile : Error {
    explicit NonIntegrableProfile(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace gbo

#endif
