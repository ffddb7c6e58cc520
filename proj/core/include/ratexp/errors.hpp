#pragma once

#include <stdexcept>
#include <string>

namespace ratexp {

// Base for all numeric failures raised by this library. Everything carries a
// human-readable message; specific types exist so callers can distinguish
// "your input is degenerate" from "the iteration did not converge".
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Elimination found more near-zero pivots than a one-dimensional null space
// can explain; the underlying linear system (and hence the scheme that
// produced it) is numerically degenerate at the working precision.
struct NumericalRankDeficiency : NumericError {
    explicit NumericalRankDeficiency(const std::string& msg) : NumericError(msg) {}
};

// An iteration (simultaneous root refinement, Newton) ran out of its
// iteration budget before meeting its convergence criterion.
struct NoConvergence : NumericError {
    NoConvergence(const std::string& msg, int iterations)
        : NumericError(msg + " (after " + std::to_string(iterations) + " iterations)"),
          iterations_done(iterations) {}
    int iterations_done;
};

// Newton hit a Jacobian it could not invert at working precision.
struct SingularJacobian : NumericError {
    explicit SingularJacobian(const std::string& msg) : NumericError(msg) {}
};

// A scheme failed validation (multiplicity bookkeeping, empty input, ...).
struct InvalidScheme : NumericError {
    explicit InvalidScheme(const std::string& msg) : NumericError(msg) {}
};

// A solved interpolant lacks the structure a caller asked for (e.g. a full
// leading coefficient where a monic rescale is required).
struct DegenerateScheme : NumericError {
    explicit DegenerateScheme(const std::string& msg) : NumericError(msg) {}
};

// An evaluation point sits on (or numerically on) a pole or branch cut where
// the requested quantity has no value.
struct PoleHit : NumericError {
    explicit PoleHit(const std::string& msg) : NumericError(msg) {}
};

// Analytic continuation of a logarithm along a path could not keep the
// per-step argument increment unambiguous (point too close to a cut, or a
// genuinely discontinuous sampling). Better loud than a silent wrong sign.
struct BranchTrackingFailure : NumericError {
    explicit BranchTrackingFailure(const std::string& msg) : NumericError(msg) {}
};

// Evaluation requested for an asymptotic formula in a region where that
// formula does not apply.
struct WrongRegion : NumericError {
    explicit WrongRegion(const std::string& msg) : NumericError(msg) {}
};

// Level-curve continuation could not advance: the transverse corrector ran
// out of iterations or the vertex budget was exhausted.
struct TraceStalled : NumericError {
    explicit TraceStalled(const std::string& msg) : NumericError(msg) {}
};

// The corrector landed on a different level set than the one being traced
// (residual far above tolerance, or a jump of more than a step width).
struct BranchConfusion : NumericError {
    explicit BranchConfusion(const std::string& msg) : NumericError(msg) {}
};

// A discretized line-measure weight came out with a non-vanishing imaginary
// part or a negative mass; signals a branch error upstream.
struct NonRealWeight : NumericError {
    explicit NonRealWeight(const std::string& msg) : NumericError(msg) {}
};

}  // namespace ratexp
