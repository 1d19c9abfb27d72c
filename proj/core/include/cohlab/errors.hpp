// Copyright 2026 The coherence-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHLAB_ERRORS_HPP
#define COHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cohlab {

/// Base class for all validation and precondition failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSquare : public Error { public: using Error::Error; };
class NotHermitian : public Error { public: using Error::Error; };
class NotPSD : public Error { public: using Error::Error; };
class TraceNotOne : public Error { public: using Error::Error; };
class NotNormalized : public Error { public: using Error::Error; };
class NotFinite : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class NotTracePreserving : public Error { public: using Error::Error; };
class NotIsometry : public Error { public: using Error::Error; };
class NotUnitary : public Error { public: using Error::Error; };
class RankDeficient : public Error { public: using Error::Error; };
class BadRank : public Error { public: using Error::Error; };
class CoefficientNormExceeded : public Error { public: using Error::Error; };
class ContractionInfeasible : public Error { public: using Error::Error; };
class InconsistentPattern : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

}  // namespace cohlab

#endif  // COHLAB_ERRORS_HPP
