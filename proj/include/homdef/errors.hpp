#pragma once

#include <stdexcept>
#include <string>

namespace homdef {

/// Base class of every error the library throws. `kind()` is the stable
/// machine-readable tag (e.g. "DimensionMismatch") used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define HOMDEF_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

HOMDEF_DEFINE_ERROR(DimensionMismatch);
HOMDEF_DEFINE_ERROR(NotASubspace);
HOMDEF_DEFINE_ERROR(InvalidAlgebra);
HOMDEF_DEFINE_ERROR(InvalidBase);
HOMDEF_DEFINE_ERROR(InvalidCocycle);
HOMDEF_DEFINE_ERROR(ShapeMismatch);
HOMDEF_DEFINE_ERROR(IncompatibleBases);
HOMDEF_DEFINE_ERROR(NotInfinitesimal);
HOMDEF_DEFINE_ERROR(NotADeformation);
HOMDEF_DEFINE_ERROR(IncompatibleExtension);
HOMDEF_DEFINE_ERROR(ObstructedEverywhere);
HOMDEF_DEFINE_ERROR(UnsupportedBase);
HOMDEF_DEFINE_ERROR(UnboundParameter);
HOMDEF_DEFINE_ERROR(ParseError);
HOMDEF_DEFINE_ERROR(InvalidArgument);

#undef HOMDEF_DEFINE_ERROR

} // namespace homdef
