/*
   Copyright 2026 The ultrainv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ULTRAINV_ERRORS_HPP
#define ULTRAINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ultrainv {

/// Stable error codes. Grouped by the exit-code class the CLI maps them to:
/// parse errors (exit 2), budget errors (exit 3), precondition errors (exit 4).
enum class Errc {
  // parse
  ParseError,
  // budget
  BudgetExceeded,
  DegreeTooLarge,
  // precondition / domain
  NotPrime,
  NotADivisor,
  ZeroElement,
  NotASubfield,
  ConstantPolynomial,
  ZeroConstantTerm,
  ZeroScalar,
  NotInZ,
  OrderDivisibleByP,
  NotASubgroup,
  DimensionMismatch,
  DegreeMismatch,
  Singular,
  NotSemisimple,
  NotSelfPaired,
  KindMismatch,
  MixedForms,
  UnsupportedCharacteristic,
  BadParity,
  NotEnumerated,
  NotAbelian,
  TNotStabilizing,
  NotCoprime,
  CoprimalityViolated,
  NotAProofCase,
  StabilizerNotTrivial,
  InternalError,
};

const char* errc_name(Errc c);

/// 0 = success is never thrown; 2 parse, 3 budget, 4 precondition.
int errc_exit_code(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ultrainv

#endif
