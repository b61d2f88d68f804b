#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centroidal {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

struct NotPrimeError : Error {
    explicit NotPrimeError(const std::string& msg) : Error(msg) {}
};

// Lexical or grammatical error in a polynomial or term text.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& msg)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// An affine block whose coefficients do not sum to 1.
struct AffineSumNotOneError : Error {
    std::string actual_sum;
    explicit AffineSumNotOneError(const std::string& sum)
        : Error("affine coefficients sum to " + sum + ", expected 1"), actual_sum(sum) {}
};

struct VarOutOfRangeError : Error {
    explicit VarOutOfRangeError(const std::string& msg) : Error(msg) {}
};

// recipe_b applied to a term whose second component is not identically zero.
struct SecondComponentNonzeroError : Error {
    explicit SecondComponentNonzeroError(const std::string& msg) : Error(msg) {}
};

struct NotInKernelError : Error {
    std::string defect_text;
    explicit NotInKernelError(const std::string& defect)
        : Error("polynomial is not in ker(phi); defect = " + defect), defect_text(defect) {}
};

struct NotStronglyTotalError : Error {
    std::string defect_text;
    NotStronglyTotalError(const std::string& defect, bool finite_field)
        : Error(finite_field
                    ? "pair is not strongly total (defect = " + defect +
                          "); over a finite field the strongly total pairs form a strict "
                          "subspace of the total pairs, so a merely total pair has no "
                          "centroidal term"
                    : "pair is not strongly total (defect = " + defect + ")"),
          defect_text(defect) {}
};

struct EnumerationTooLargeError : Error {
    explicit EnumerationTooLargeError(const std::string& msg) : Error(msg) {}
};

}  // namespace centroidal
