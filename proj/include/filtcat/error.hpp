#pragma once

#include <stdexcept>
#include <string>

namespace filtcat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Matrix/shape misuse and malformed input data.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& w) : Error("ShapeMismatch: " + w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError: " + w) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& w) : Error("ValidationError: " + w) {}
};

// factor_through_mono preconditions.
struct NotInjective : Error {
    explicit NotInjective(const std::string& w) : Error("NotInjective: " + w) {}
};
struct NotContained : Error {
    explicit NotContained(const std::string& w) : Error("NotContained: " + w) {}
};

// Poset / monoid preconditions.
struct NotDirected : Error {
    explicit NotDirected(const std::string& w) : Error("NotDirected: " + w) {}
};
struct NotAntisymmetric : Error {
    explicit NotAntisymmetric(const std::string& w) : Error("NotAntisymmetric: " + w) {}
};
struct AxiomFailure : Error {
    explicit AxiomFailure(const std::string& w) : Error("AxiomFailure: " + w) {}
};

// Functor / morphism laws.
struct FunctorLaw : Error {
    explicit FunctorLaw(const std::string& w) : Error("FunctorLaw: " + w) {}
};
struct NotNatural : Error {
    explicit NotNatural(const std::string& w) : Error("NotNatural: " + w) {}
};
struct NotFiltered : Error {
    explicit NotFiltered(const std::string& w) : Error("NotFiltered: " + w) {}
};
struct NotLinear : Error {
    explicit NotLinear(const std::string& w) : Error("NotLinear: " + w) {}
};
struct ComposeNonzero : Error {
    explicit ComposeNonzero(const std::string& w) : Error("ComposeNonzero: " + w) {}
};

// Comparison morphisms that theory predicts to be invertible.
struct ComparisonNotIso : Error {
    explicit ComparisonNotIso(const std::string& w) : Error("ComparisonNotIso: " + w) {}
};

struct UnknownCommand : Error {
    explicit UnknownCommand(const std::string& w) : Error("UnknownCommand: " + w) {}
};

}  // namespace filtcat
