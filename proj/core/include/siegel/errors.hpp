#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// matkernel
struct DomainError : Error { using Error::Error; };        // spectral function undefined at an eigenvalue
struct InvalidNorm : Error { using Error::Error; };        // Schatten exponent q < 1
struct RankDeficient : Error { using Error::Error; };      // projector input has (nearly) dependent columns

// half-space / ball geometry
struct DegenerateY : Error { using Error::Error; };        // imaginary part not (sufficiently) positive definite
struct SingularCayley : Error { using Error::Error; };     // Z + iI not invertible
struct BoundaryPole : Error { using Error::Error; };       // I - W singular, or W on the boundary sphere
struct DegeneratePoint : Error { using Error::Error; };    // operation undefined at Z = iI
struct ConsistencyError : Error { using Error::Error; };   // internal invariant violated beyond tolerance

// symplectic family
struct OutOfInterval : Error { using Error::Error; };      // lambda outside the admissible interval
struct SingularDenominator : Error { using Error::Error; };// Moebius resolvent factor singular

// boundary sequences
struct AsymmetricX : Error { using Error::Error; };        // S violates the coupling that keeps X symmetric
struct InfeasibleCase : Error { using Error::Error; };     // witness requested for an impossible case
struct NotImpossibleCase : Error { using Error::Error; };  // falsifier requested for a feasible case

// configuration / IO
struct SchemaError : Error { using Error::Error; };        // malformed point or config payload
struct AsymmetryError : Error { using Error::Error; };     // matrix payload not symmetric within tolerance
struct NotPSD : Error { using Error::Error; };             // Y payload has an eigenvalue below -1e-12

}  // namespace siegel
