#pragma once

#include <stdexcept>
#include <string>

namespace brackets {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// expr-core
struct CyclicSubstitution : Error { using Error::Error; };
struct GammaPole : Error { using Error::Error; };
struct NegativeBase : Error { using Error::Error; };
struct UnboundSymbol : Error { using Error::Error; };

// bracket-engine
struct MalformedSpec : Error { using Error::Error; };
struct IndexCollision : Error { using Error::Error; };
struct NoInvertibleChoice : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };

// series-eval
struct BoundaryUndecided : Error { using Error::Error; };
struct NoConvergentRepresentation : Error { using Error::Error; };
struct InconsistentGroups : Error { using Error::Error; };

// numeric-oracle
struct NoConvergence : Error { using Error::Error; };
struct DimensionTooHigh : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoOracleAvailable : Error { using Error::Error; };

// feynman
struct HintMismatch : Error { using Error::Error; };

// cli-catalog
struct SchemaError : Error { using Error::Error; };

} // namespace brackets
