#pragma once

#include <stdexcept>
#include <string>

namespace polyface {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- lattice construction / queries -----------------------------------------

/// A cover pair skips a rank, or declared ranks are inconsistent.
struct NotGraded : Error { using Error::Error; };

/// More than one minimal or more than one maximal element.
struct NotBounded : Error { using Error::Error; };

/// The cover relation is cyclic (detected while inferring ranks).
struct CycleDetected : Error { using Error::Error; };

/// interval(x, y) requested with x not below y.
struct NotComparable : Error { using Error::Error; };

// --- constructions -----------------------------------------------------------

/// stack_over_facet applied to a coatom whose lower interval is not Boolean.
struct FacetNotSimplex : Error { using Error::Error; };

/// A PolytopeSpec violates its parameter invariants (e.g. tdm with i > d).
struct SpecInvariantViolated : Error { using Error::Error; };

/// link() requested for a face the complex does not contain.
struct FaceNotInComplex : Error { using Error::Error; };

// --- checks / bounds ---------------------------------------------------------

/// A matrix or lattice exceeds the configured size cap (POLYFACE_SIZE_LIMIT).
struct SizeLimit : Error { using Error::Error; };

/// A verifier was handed input outside its stated preconditions.
struct PreconditionViolated : Error { using Error::Error; };

/// A closed-form formula was evaluated outside its domain of validity.
struct OutOfFormulaRange : Error { using Error::Error; };

// --- io / cli ----------------------------------------------------------------

/// Spec-DSL or JSON text failed to parse.
struct ParseError : Error { using Error::Error; };

/// File could not be read or written.
struct IoError : Error { using Error::Error; };

/// JSON parsed but does not describe a valid lattice/complex.
struct MalformedLattice : Error { using Error::Error; };

/// `verify` invoked with a theorem name it does not know.
struct UnknownTheorem : Error { using Error::Error; };

} // namespace polyface
