/*
   Copyright 2026 the circinv developers

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

#ifndef CIRCINV_ERRORS_HPP
#define CIRCINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circinv {

// Error categories surfaced through the C API and the CLI exit codes.
enum class ErrorCode {
    InvalidOrder,
    OrderMismatch,
    BasisMismatch,
    DivisionByZero,
    NotADivisor,
    NotCoprime,
    TooManyPrimeFactors,
    TooFewPrimeFactors,
    NotInLattice,
    NegativeEntry,
    LengthMismatch,
    NotInvariant,
    SyntaxError,
    IndexOutOfRange,
    ExpansionTooLarge,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::BasisMismatch: return "BasisMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::TooManyPrimeFactors: return "TooManyPrimeFactors";
        case ErrorCode::TooFewPrimeFactors: return "TooFewPrimeFactors";
        case ErrorCode::NotInLattice: return "NotInLattice";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotInvariant: return "NotInvariant";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ExpansionTooLarge: return "ExpansionTooLarge";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace circinv

#endif
