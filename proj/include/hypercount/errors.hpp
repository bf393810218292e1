/* Copyright 2026 The hypercount Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace hypercount {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  DivisionByZero,
  ZeroRadicand,
  NoRootInField,
  NotPrimeField,
  NotInSubfield,
  FieldMismatch,
  IndexTooLargeForCharacteristic,
  ZeroPolynomial,
  SingularCurve,
  BadGenus,
  CharacteristicDividesGenus,
  BudgetExceeded,
  InvalidArgument,
  UnsupportedGenus,
  RowNotApplicable,
  NoSolution,
  NoCandidateSurvives,
  AmbiguousResult,
  EmptyAfterFilter,
  RootUnavailable,
  EvenGenus,
  MismatchDetected,
  SingularSpecialization,
  NonResidueDiscriminant,
  RetryLimit,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(Errc::InvalidArgument, what);
}

}  // namespace hypercount
