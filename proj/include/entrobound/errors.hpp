#pragma once

#include <stdexcept>
#include <string>

namespace entrobound {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact-algebra layer
struct NonSquare : Error { using Error::Error; };
struct DependentInput : Error { using Error::Error; };
struct InexactDivision : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };

// nilpotent-algebra layer
struct NotAntisymmetric : Error { using Error::Error; };
struct JacobiFails : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct BracketIncompatible : Error { using Error::Error; };
struct LatticeNotPreserved : Error { using Error::Error; };

// numerics layer
struct NoConvergence : Error { using Error::Error; };
struct BadPower : Error { using Error::Error; };

// simulation layer
struct GridTooCoarse : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotLiftable : Error { using Error::Error; };
struct InsufficientWindow : Error { using Error::Error; };

// cli layer
struct ParseError : Error { using Error::Error; };

} // namespace entrobound
