/*
   Copyright 2026 The polyac authors

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

#ifndef POLYAC_ERRORS_HPP
#define POLYAC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyac {

// Every domain error carries a stable name() used by the CLI when mapping
// failures to exit code 1 + a one-line stderr message.
class Error : public std::runtime_error {
   public:
    Error(std::string name, const std::string& what) : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

   private:
    std::string name_;
};

#define POLYAC_DEFINE_ERROR(E)                                              \
    class E : public Error {                                                \
       public:                                                              \
        explicit E(const std::string& what = "") : Error(#E, what) {}       \
    }

POLYAC_DEFINE_ERROR(DivisionByZero);
POLYAC_DEFINE_ERROR(ModulusMismatch);
POLYAC_DEFINE_ERROR(NotPrime);
POLYAC_DEFINE_ERROR(ZeroPolynomial);
POLYAC_DEFINE_ERROR(DuplicateNode);
POLYAC_DEFINE_ERROR(NotMonic);
POLYAC_DEFINE_ERROR(NotDivisible);
POLYAC_DEFINE_ERROR(NotAPerfectPower);
POLYAC_DEFINE_ERROR(DegreeNotDivisible);
POLYAC_DEFINE_ERROR(InconsistentSeries);
POLYAC_DEFINE_ERROR(SharedRoot);
POLYAC_DEFINE_ERROR(SingularMatrix);
POLYAC_DEFINE_ERROR(NotCoprime);
POLYAC_DEFINE_ERROR(DegreeTooHigh);
POLYAC_DEFINE_ERROR(DegenerateParameterization);
POLYAC_DEFINE_ERROR(OutputDegreeOverflow);
POLYAC_DEFINE_ERROR(MalformedCircuit);
POLYAC_DEFINE_ERROR(CapExceeded);
POLYAC_DEFINE_ERROR(NotAPolynomial);
POLYAC_DEFINE_ERROR(NoNonzeroPoint);
POLYAC_DEFINE_ERROR(ZeroCircuit);
POLYAC_DEFINE_ERROR(FieldTooSmall);
POLYAC_DEFINE_ERROR(ParseError);

#undef POLYAC_DEFINE_ERROR

// Characteristic guard failure; carries the offending pair.
class CharacteristicTooSmall : public Error {
   public:
    CharacteristicTooSmall(std::uint64_t p, std::uint64_t bound)
        : Error("CharacteristicTooSmall",
                "p = " + std::to_string(p) + " but the construction requires p > " + std::to_string(bound)),
          p_(p),
          bound_(bound) {}
    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t bound() const noexcept { return bound_; }

   private:
    std::uint64_t p_, bound_;
};

// Division by a value that evaluates to zero at a specific gate: the input
// lies outside the circuit's domain.
class DivisionByZeroAtGate : public Error {
   public:
    explicit DivisionByZeroAtGate(std::size_t gate)
        : Error("DivisionByZeroAtGate", "gate index " + std::to_string(gate)), gate_(gate) {}
    std::size_t gate() const noexcept { return gate_; }

   private:
    std::size_t gate_;
};

}  // namespace polyac

#endif
