#pragma once

#include <stdexcept>
#include <string>

namespace pcanlab {

// Base of every error the library reports; kind() is the stable name used in
// reports and CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define PCANLAB_ERROR(Name)                                                   \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    }

PCANLAB_ERROR(NotFiniteType);
PCANLAB_ERROR(ShapeError);
PCANLAB_ERROR(BadSigma);
PCANLAB_ERROR(NotMinimal);
PCANLAB_ERROR(NotDominant);
PCANLAB_ERROR(DatumMismatch);
PCANLAB_ERROR(MissingEntry);
PCANLAB_ERROR(SchemaError);
PCANLAB_ERROR(PositivityViolation);
PCANLAB_ERROR(TriangularityViolation);
PCANLAB_ERROR(NotSymmetric);
PCANLAB_ERROR(InhomogeneousRelation);
PCANLAB_ERROR(BoundExceeded);
PCANLAB_ERROR(NotComposable);
PCANLAB_ERROR(NotQuadratic);
PCANLAB_ERROR(NotKoszulInRange);
PCANLAB_ERROR(NotFiniteDimensional);
PCANLAB_ERROR(ParseError);

#undef PCANLAB_ERROR

}  // namespace pcanlab
