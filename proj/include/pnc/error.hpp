#pragma once

#include <stdexcept>
#include <string>

namespace pnc {

enum class Errc {
  NonPositiveLead,
  IndexOutOfRange,
  ThetaLengthMismatch,
  InvalidKeySequence,
  ZeroPolynomial,
  NegativePower,
  NonPrimitive,
  NotAlgebraic,
  NotNormalForm,
  NotEssential,
  NotDeltaSequence,
  InconsistentInput,
  IrrationalCorrection,
  InadmissibleChange,
  NonIntegralDegree,
  BoundsTooLarge,
  IrrationalCoefficientNeeded,
  NotNormalizable,
  UsageError,
  InternalError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pnc
