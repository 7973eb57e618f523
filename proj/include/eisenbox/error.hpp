#pragma once

#include <stdexcept>
#include <string>

namespace eisenbox {

/// Base of every exception thrown by the library. `code()` is a short
/// machine-readable identifier used in CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but the mathematics cannot proceed
/// (CLI exit code 3).
class MathError : public Error {
 public:
  using Error::Error;
};

class UnfactoredResidue : public MathError {
 public:
  explicit UnfactoredResidue(const std::string& residue)
      : MathError("unfactored_residue",
                  "composite residue " + residue + " exceeds the factorization cap"),
        residue_(residue) {}
  const std::string& residue() const noexcept { return residue_; }

 private:
  std::string residue_;
};

class NonSimpleRoot : public MathError {
 public:
  explicit NonSimpleRoot(const std::string& what) : MathError("non_simple_root", what) {}
};

class SeedAccuracy : public MathError {
 public:
  explicit SeedAccuracy(const std::string& what) : MathError("seed_accuracy", what) {}
};

class NotSquarefree : public MathError {
 public:
  explicit NotSquarefree(const std::string& what) : MathError("not_squarefree", what) {}
};

class RegularityFailure : public MathError {
 public:
  explicit RegularityFailure(const std::string& what)
      : MathError("regularity_failure", what) {}
};

}  // namespace eisenbox
