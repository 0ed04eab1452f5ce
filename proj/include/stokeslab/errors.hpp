#pragma once

#include <stdexcept>
#include <string>

namespace stokes {

// Exit code 2: input or precondition failures that a user can fix in the config.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit code 3: a numerical procedure failed to meet its contract.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSmoothVorticity : ValidationError {
    explicit NonSmoothVorticity(const std::string& m) : ValidationError("NonSmoothVorticity: " + m) {}
};
struct SubcriticalSlope : ValidationError {
    explicit SubcriticalSlope(const std::string& m) : ValidationError("SubcriticalSlope: " + m) {}
};
struct NoWavesForR : ValidationError {
    explicit NoWavesForR(const std::string& m) : ValidationError("NoWavesForR: " + m) {}
};
struct SupercriticalStream : ValidationError {
    explicit SupercriticalStream(const std::string& m) : ValidationError("SupercriticalStream: " + m) {}
};
struct OutOfRange : ValidationError {
    explicit OutOfRange(const std::string& m) : ValidationError("OutOfRange: " + m) {}
};
struct IoFailure : ValidationError {
    explicit IoFailure(const std::string& m) : ValidationError("IoFailure: " + m) {}
};

struct SingularBVP : NumericError {
    explicit SingularBVP(const std::string& m) : NumericError("SingularBVP: " + m) {}
};
struct DegenerateHp : NumericError {
    explicit DegenerateHp(const std::string& m) : NumericError("DegenerateHp: " + m) {}
};
struct SolverSingular : NumericError {
    explicit SolverSingular(const std::string& m) : NumericError("SolverSingular: " + m) {}
};
struct NewtonDiverged : NumericError {
    explicit NewtonDiverged(const std::string& m) : NumericError("NewtonDiverged: " + m) {}
};
struct EigensolverFailure : NumericError {
    explicit EigensolverFailure(const std::string& m) : NumericError("EigensolverFailure: " + m) {}
};
struct StepFailure : NumericError {
    explicit StepFailure(const std::string& m) : NumericError("StepFailure: " + m) {}
};
struct KernelNotFound : NumericError {
    explicit KernelNotFound(const std::string& m) : NumericError("KernelNotFound: " + m) {}
};
struct KernelNotSimple : NumericError {
    explicit KernelNotSimple(const std::string& m) : NumericError("KernelNotSimple: " + m) {}
};
struct NotReached : NumericError {
    explicit NotReached(const std::string& m) : NumericError("NotReached: " + m) {}
};
struct CurveBroken : NumericError {
    explicit CurveBroken(const std::string& m) : NumericError("CurveBroken: " + m) {}
};
struct KernelCheckFailed : NumericError {
    explicit KernelCheckFailed(const std::string& m) : NumericError("KernelCheckFailed: " + m) {}
};
struct FellBackToStokes : NumericError {
    explicit FellBackToStokes(const std::string& m) : NumericError("FellBackToStokes: " + m) {}
};
struct FitAmbiguous : NumericError {
    explicit FitAmbiguous(const std::string& m) : NumericError("FitAmbiguous: " + m) {}
};
struct AmbiguousSign : NumericError {
    explicit AmbiguousSign(const std::string& m) : NumericError("AmbiguousSign: " + m) {}
};

}  // namespace stokes
